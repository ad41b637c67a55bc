"""Reference numpy implementations of the module-lab kernels.

Same signatures and results as the compiled ``_core`` extension. Modules are
written additively here: identity 0, and (1 - s).x = x - s(x).
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._common import allowed_steps, decode, digits_table, encode, entry_radix, weights


class _Arith:
    def __init__(self, orders):
        self.n = np.asarray(orders, dtype=np.int64)
        self.w = weights(self.n)
        self.d = digits_table(self.n)

    def add(self, x, y):
        return ((self.d[x] + self.d[y]) % self.n) @ self.w

    def sub(self, x, y):
        return ((self.d[x] - self.d[y]) % self.n) @ self.w


def qh90_check(orders, t):
    """ker(1 + s) inside im(1 - s)? Returns (holds, first offending element or -1)."""
    t = np.asarray(t, dtype=np.int64)
    ar = _Arith(orders)
    x = np.arange(len(t))
    image = np.zeros(len(t), dtype=bool)
    image[ar.sub(x, t)] = True
    kernel = ar.add(x, t) == 0
    bad = np.flatnonzero(kernel & ~image)
    return (len(bad) == 0, int(bad[0]) if len(bad) else -1)


def kernel_equality(orders, t1, t2):
    """Compare ker(1-s1)(1-s2) with ker(1-s1) + ker(1-s2).

    Returns (equal, inclusion, witness): ``inclusion`` is sum-of-kernels inside
    the composite kernel; ``witness`` is an element in the symmetric difference
    or -1.
    """
    t1 = np.asarray(t1, dtype=np.int64)
    t2 = np.asarray(t2, dtype=np.int64)
    ar = _Arith(orders)
    x = np.arange(len(t1))
    # x - s1 x - s2 x + s1 s2 x
    comp = ar.add(ar.sub(ar.sub(x, t1), t2), t1[t2])
    lhs = comp == 0
    k1 = np.flatnonzero(t1 == x)
    k2 = np.flatnonzero(t2 == x)
    rhs = np.zeros(len(t1), dtype=bool)
    for a in k1:
        rhs[ar.add(np.full(len(k2), a), k2)] = True
    extra = np.flatnonzero(rhs & ~lhs)
    if len(extra):
        return False, False, int(extra[0])
    missing = np.flatnonzero(lhs & ~rhs)
    if len(missing):
        return False, True, int(missing[0])
    return True, True, -1


def implication(orders, t1, t2):
    """Do conditions (1), (2) on (m1, m2) force a common n with m_i = (1 - s_i) n?

    Returns (holds, m1, m2) with the first failing pair, or (True, -1, -1).
    """
    t1 = np.asarray(t1, dtype=np.int64)
    t2 = np.asarray(t2, dtype=np.int64)
    size = len(t1)
    ar = _Arith(orders)
    x = np.arange(size)
    reachable = np.zeros(size * size, dtype=bool)
    reachable[ar.sub(x, t1) * size + ar.sub(x, t2)] = True
    ker1 = np.flatnonzero(ar.add(x, t1) == 0)
    ker2 = np.flatnonzero(ar.add(x, t2) == 0)
    for m1 in ker1:
        m1s = np.full(len(ker2), m1)
        # m1 * s1(m2) == m2 * s2(m1)
        ok = ar.add(m1s, t1[ker2]) == ar.add(ker2, np.full(len(ker2), t2[m1]))
        cand = ker2[ok]
        bad = cand[~reachable[m1 * size + cand]]
        if len(bad):
            return False, int(m1), int(bad[0])
    return True, -1, -1


_BATCH = 1 << 18


def end_involutions(orders):
    """Codes of every well-defined endomorphism X with X o X = id, sorted."""
    orders = np.asarray(orders, dtype=np.int64)
    k = len(orders)
    radix = entry_radix(orders)
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    step = allowed_steps(orders).reshape(-1)
    count = (np.repeat(orders, k) // step).astype(np.int64)
    total = int(np.prod(count))
    # odometer place values over the allowed entry choices
    place = np.ones(k * k, dtype=np.int64)
    for t in range(k * k - 2, -1, -1):
        place[t] = place[t + 1] * count[t + 1]
    eye = np.eye(k, dtype=np.int64)
    found = []
    for start in range(0, total, _BATCH):
        idx = np.arange(start, min(total, start + _BATCH), dtype=np.int64)
        entries = ((idx[:, None] // place[None, :]) % count[None, :]) * step[None, :]
        mats = entries.reshape(-1, k, k)
        sq = np.matmul(mats, mats) % orders[None, :, None]
        keep = (sq == eye).all(axis=(1, 2))
        if keep.any():
            found.append(encode(mats[keep], radix))
    if not found:
        return np.zeros(0, dtype=np.int64)
    return np.sort(np.concatenate(found))


def orbit_labels(codes, orders, gens, gens_inv):
    """Label each code by its orbit under X -> g X g^-1 for g in ``gens``.

    ``codes`` must be sorted and closed under the action. The label of an
    orbit is the index of its smallest code.
    """
    codes = np.asarray(codes, dtype=np.int64)
    orders = np.asarray(orders, dtype=np.int64)
    m = len(codes)
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    radix = entry_radix(orders)
    n = orders[None, :, None]
    rows, cols = [], []
    for g, gi in zip(gens, gens_inv):
        g = np.asarray(g, dtype=np.int64)
        gi = np.asarray(gi, dtype=np.int64)
        for start in range(0, m, _BATCH):
            mats = decode(codes[start : start + _BATCH], orders, radix)
            img = encode((g[None] @ ((mats @ gi[None]) % n)) % n, radix)
            pos = np.searchsorted(codes, img)
            if (pos >= m).any() or (codes[np.minimum(pos, m - 1)] != img).any():
                raise ValueError("candidate set is not closed under the generators")
            rows.append(np.arange(start, start + len(img)))
            cols.append(pos)
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(m, m))
        _, comp = connected_components(graph, directed=True, connection="weak")
    else:
        comp = np.arange(m)
    first = np.full(comp.max() + 1, m, dtype=np.int64)
    np.minimum.at(first, comp, np.arange(m))
    return first[comp]
