"""Encoding helpers shared by both kernel backends.

An element of Z/n_0 + ... + Z/n_{k-1} is an exponent vector (d_0, ..., d_{k-1})
and is indexed little-endian: index = sum d_j * w_j with w_0 = 1 and
w_j = n_0 * ... * n_{j-1}. Index 0 is the identity.

A k x k endomorphism matrix X (row i taken mod n_i) is packed into one int64
code with mixed radix n_i per entry, row-major.
"""

from __future__ import annotations

import numpy as np

MAX_CODE = 1 << 62


def weights(orders) -> np.ndarray:
    orders = np.asarray(orders, dtype=np.int64)
    w = np.ones(len(orders), dtype=np.int64)
    for j in range(1, len(orders)):
        w[j] = w[j - 1] * orders[j - 1]
    return w


def digits_table(orders) -> np.ndarray:
    """(|M|, k) array of exponent vectors, row x = digits of index x."""
    orders = np.asarray(orders, dtype=np.int64)
    size = int(np.prod(orders)) if len(orders) else 1
    idx = np.arange(size, dtype=np.int64)
    w = weights(orders)
    if len(orders) == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return (idx[:, None] // w[None, :]) % orders[None, :]


def entry_radix(orders) -> np.ndarray:
    """(k, k) array of place values for packing matrices into codes."""
    orders = np.asarray(orders, dtype=np.int64)
    k = len(orders)
    bases = np.repeat(orders, k)
    place = np.ones(k * k, dtype=object)
    for t in range(k * k - 2, -1, -1):
        place[t] = place[t + 1] * int(bases[t + 1])
    if k and place[0] * int(bases[0]) > MAX_CODE:
        raise OverflowError("matrix codes do not fit in 62 bits")
    return place.astype(np.int64).reshape(k, k)


def encode(mats: np.ndarray, radix: np.ndarray) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64)
    return np.einsum("mij,ij->m", mats, radix) if mats.ndim == 3 else int((mats * radix).sum())


def decode(codes, orders, radix) -> np.ndarray:
    codes = np.atleast_1d(np.asarray(codes, dtype=np.int64))
    orders = np.asarray(orders, dtype=np.int64)
    k = len(orders)
    mod = np.repeat(orders, k).reshape(k, k)
    return (codes[:, None, None] // radix[None]) % mod[None]


def matmul_mod(a: np.ndarray, b: np.ndarray, orders) -> np.ndarray:
    """Compose endomorphisms (a after b); works on single matrices or stacks."""
    orders = np.asarray(orders, dtype=np.int64)
    return (a @ b) % orders[:, None]


def allowed_steps(orders) -> np.ndarray:
    """Entry X[i, j] must be a multiple of n_i / gcd(n_i, n_j) to be well defined."""
    orders = np.asarray(orders, dtype=np.int64)
    g = np.gcd.outer(orders, orders)
    return orders[:, None] // g


def table(mat, orders, digits=None) -> np.ndarray:
    """Permutation table x -> index(X . x) of an endomorphism on element indices."""
    orders = np.asarray(orders, dtype=np.int64)
    if digits is None:
        digits = digits_table(orders)
    if len(orders) == 0:
        return np.zeros(1, dtype=np.int64)
    img = (digits @ np.asarray(mat, dtype=np.int64).T) % orders[None, :]
    return img @ weights(orders)
