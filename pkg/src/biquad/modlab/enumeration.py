"""Enumerate finite Klein modules up to isomorphism of the underlying action.

A finite abelian group splits into its p-primary parts and every endomorphism
is block diagonal along that split, so commuting involution pairs (and their
classes under Aut) are products of per-prime data. For each p-group:

1. list every involution of the group (brute force over End, or the
   square-zero parametrization X = I + N, N^2 = 0, for elementary abelian
   2-groups, where End is too large);
2. split the involutions into Aut-conjugacy classes and keep one s1 per class;
3. for each s1, split the involutions commuting with s1 into classes under
   the centralizer C(s1) and keep one s2 per class.

Centralizer elements come from collisions a s1 a^-1 = b s1 b^-1 between
uniform random automorphisms (then b^-1 a is uniform in C(s1)). If the
sampled elements only generate part of a group, orbits get split and some
modules are yielded twice; no class is ever lost.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from math import prod

import numpy as np

from . import kernels
from ._common import allowed_steps, decode, digits_table, encode, entry_radix, weights
from .module import FiniteKleinModule

# brute-force End enumeration up to this many endomorphisms
END_BRUTE_LIMIT = 1 << 26
_CHUNK = 1 << 16
_COLLISIONS = 12


def _factor(n: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def abelian_groups(order: int):
    """Abelian groups of the given order as cyclic factor lists.

    Primes ascend; within a prime the factors descend. Each group appears once.
    """
    per_prime = [[tuple(p**k for k in lam) for lam in partitions(e)] for p, e in _factor(order)]
    for parts in product(*per_prime):
        yield tuple(n for part in parts for n in part)


def end_size(orders) -> int:
    orders = np.asarray(orders, dtype=np.int64)
    return int(np.prod(np.gcd.outer(orders, orders).astype(object))) if len(orders) else 1


# -- involutions ------------------------------------------------------------


def _f2_involutions(r: int) -> np.ndarray:
    """Involutions of (Z/2)^r as I + B C with im(BC) = span(B) and C B = 0."""
    radix = entry_radix([2] * r)
    eye = np.eye(r, dtype=np.int64)
    found = [encode(eye[None], radix)]
    bits = np.array([[(v >> i) & 1 for i in range(r)] for v in range(1 << r)], dtype=np.int64)

    def span(vs):
        s = {0}
        for v in vs:
            s |= {x ^ v for x in s}
        return s

    for k in range(1, r // 2 + 1):
        seen = set()
        for basis in combinations(range(1, 1 << r), k):
            sp = frozenset(span(basis))
            if len(sp) != 1 << k or sp in seen:
                continue
            seen.add(sp)
            ann = [c for c in range(1, 1 << r) if all(bin(c & b).count("1") % 2 == 0 for b in basis)]
            rows = [t for t in permutations(ann, k) if len(span(t)) == 1 << k]
            B = bits[list(basis)].T  # r x k
            C = bits[np.array(rows)]  # m x k x r
            N = np.einsum("ik,mkj->mij", B, C) % 2
            found.append(encode((eye[None] + N) % 2, radix))
    return np.sort(np.concatenate(found))


@lru_cache(maxsize=None)
def _involutions(orders: tuple) -> np.ndarray:
    if orders and all(n == 2 for n in orders) and len(orders) >= 4:
        return _f2_involutions(len(orders))
    if end_size(orders) > END_BRUTE_LIMIT:
        raise NotImplementedError(f"involution enumeration for {orders} is not supported")
    return kernels.end_involutions(np.array(orders, dtype=np.int64))


def involutions(orders) -> np.ndarray:
    """Sorted codes of all involutive automorphisms (identity included)."""
    return _involutions(tuple(int(n) for n in orders))


# -- automorphisms ----------------------------------------------------------


def _inverse_matrices(tables, orders):
    """Matrices of the inverse permutations; column j is the preimage of generator j."""
    inv = np.argsort(tables, axis=1)
    w = weights(orders)
    digits = digits_table(orders)
    return np.transpose(digits[inv[:, w]], (0, 2, 1))


def _tables(mats, orders):
    digits = digits_table(orders)
    w = weights(orders)
    # image of every element under every matrix
    img = np.einsum("xj,mij->mxi", digits, mats) % np.asarray(orders)[None, None, :]
    return img @ w


def random_automorphisms(orders, rng, count: int):
    """``count`` uniform automorphisms and their inverses, by rejection from End."""
    orders = np.asarray(orders, dtype=np.int64)
    k = len(orders)
    step = allowed_steps(orders)
    choices = orders[:, None] // step
    size = int(np.prod(orders))
    got, got_inv = [], []
    have = 0
    while have < count:
        batch = max(64, 2 * (count - have))
        mats = rng.integers(0, np.broadcast_to(choices, (batch, k, k))) * step[None]
        tabs = _tables(mats, orders)
        ok = (np.sort(tabs, axis=1) == np.arange(size)[None]).all(axis=1)
        if ok.any():
            got.append(mats[ok])
            got_inv.append(_inverse_matrices(tabs[ok], orders))
            have += int(ok.sum())
    return np.concatenate(got)[:count], np.concatenate(got_inv)[:count]


def aut_generators(orders, rng, extra: int = 4):
    """Elementary automorphisms plus a few random ones; (gens, inverses)."""
    orders = np.asarray(orders, dtype=np.int64)
    k = len(orders)
    step = allowed_steps(orders)
    eye = np.eye(k, dtype=np.int64)
    gens, inv = [], []
    for i in range(k):
        for u in (-1, 2, 3, 5):
            if np.gcd(u, orders[i]) == 1 and u % orders[i] != 1:
                g = eye.copy()
                g[i, i] = u % orders[i]
                gens.append(g)
                inv.append(None)
    for i in range(k - 1):
        for a, b in ((i, i + 1), (i + 1, i)):
            g = eye.copy()
            g[a, b] = step[a, b] % orders[a]
            if g[a, b]:
                gens.append(g)
                gi = eye.copy()
                gi[a, b] = (-step[a, b]) % orders[a]
                inv.append(gi)
        if orders[i] == orders[i + 1]:
            g = eye.copy()
            g[[i, i + 1]] = g[[i + 1, i]]
            gens.append(g)
            inv.append(g.copy())
    if gens:
        tabs = _tables(np.array(gens), orders)
        computed = _inverse_matrices(tabs, orders)
        inv = [c if i is None else i for i, c in zip(inv, computed)]
    if k:
        rg, ri = random_automorphisms(orders, rng, extra)
        gens.extend(rg)
        inv.extend(ri)
    return [np.asarray(g) for g in gens], [np.asarray(g) for g in inv]


# -- classes ----------------------------------------------------------------


def _commuting(codes, x, orders):
    """Subset of ``codes`` whose matrices commute with x (order preserved)."""
    radix = entry_radix(orders)
    n = np.asarray(orders, dtype=np.int64)[None, :, None]
    keep = []
    for start in range(0, len(codes), _CHUNK):
        mats = decode(codes[start : start + _CHUNK], orders, radix)
        keep.append(((x[None] @ mats) % n == (mats @ x[None]) % n).all(axis=(1, 2)))
    return codes[np.concatenate(keep)] if keep else codes


def _conj_codes(a, a_inv, x, orders, radix):
    n = np.asarray(orders, dtype=np.int64)[None, :, None]
    return encode((a @ ((x[None] @ a_inv) % n)) % n, radix)


def centralizer_generators(x, orders, gens, gens_inv, class_size: int, rng):
    """Elements of C(x): the given generators that commute with x, plus birthday collisions."""
    orders = np.asarray(orders, dtype=np.int64)
    n = orders[:, None]
    cg, ci = [], []
    for g, gi in zip(gens, gens_inv):
        if np.array_equal((g @ x) % n, (x @ g) % n):
            cg.append(g)
            ci.append(gi)
    if class_size <= 1 and len(cg) == len(gens):
        return cg, ci
    radix = entry_radix(orders)
    seen: dict[int, tuple] = {}
    found = 0
    batch = max(64, int(np.sqrt(class_size)) + 1)
    while found < _COLLISIONS:
        a, ai = random_automorphisms(orders, rng, batch)
        codes = _conj_codes(a, ai, x, orders, radix)
        for j, c in enumerate(codes.tolist()):
            if c in seen:
                b, bi = seen[c]
                cg.append((bi @ a[j]) % n)
                ci.append((ai[j] @ b) % n)
                found += 1
            else:
                seen[c] = (a[j], ai[j])
    return cg, ci


def _orbit_reps(codes, orders, gens, gens_inv):
    labels = kernels.orbit_labels(codes, np.asarray(orders, dtype=np.int64), gens, gens_inv)
    reps = np.flatnonzero(labels == np.arange(len(codes)))
    sizes = np.bincount(labels, minlength=len(codes))[reps]
    return reps, sizes


@lru_cache(maxsize=None)
def _pair_classes(orders: tuple, dedup: bool, seed: int):
    orders_arr = np.array(orders, dtype=np.int64)
    radix = entry_radix(orders_arr)
    inv_all = involutions(orders)
    if not dedup:
        out = []
        for c in inv_all:
            x = decode(c, orders_arr, radix)[0]
            for y in decode(_commuting(inv_all, x, orders_arr), orders_arr, radix):
                out.append((x, y))
        return out
    rng = np.random.default_rng(seed)
    gens, gens_inv = aut_generators(orders_arr, rng)
    reps, sizes = _orbit_reps(inv_all, orders_arr, gens, gens_inv)
    out = []
    for r, size in zip(reps, sizes):
        x = decode(inv_all[r], orders_arr, radix)[0]
        cand = _commuting(inv_all, x, orders_arr)
        cg, ci = centralizer_generators(x, orders_arr, gens, gens_inv, int(size), rng)
        sub, _ = _orbit_reps(cand, orders_arr, cg, ci)
        for y in decode(cand[sub], orders_arr, radix):
            out.append((x, y))
    return out


def commuting_involution_pairs(orders, dedup: bool = True, seed: int = 0):
    """Pairs (s1, s2) of commuting involutions on one p-group, one per Aut class if ``dedup``."""
    return _pair_classes(tuple(int(n) for n in orders), dedup, seed)


def _block_diag(blocks):
    k = sum(b.shape[0] for b in blocks)
    out = np.zeros((k, k), dtype=np.int64)
    at = 0
    for b in blocks:
        m = b.shape[0]
        out[at : at + m, at : at + m] = b
        at += m
    return out


def _primary_parts(orders):
    parts: dict[int, list] = {}
    for n in orders:
        parts.setdefault(_factor(n)[0][0], []).append(n)
    return [tuple(parts[p]) for p in sorted(parts)]


def modules_of_group(orders, dedup: bool = True, seed: int = 0):
    orders = tuple(int(n) for n in orders)
    if not orders:
        yield FiniteKleinModule((), (), ())
        return
    per_part = [commuting_involution_pairs(part, dedup, seed) for part in _primary_parts(orders)]
    for combo in product(*per_part):
        s1 = _block_diag([c[0] for c in combo])
        s2 = _block_diag([c[1] for c in combo])
        yield FiniteKleinModule(orders, s1.tolist(), s2.tolist())


def enumerate_modules(max_order: int, dedup: bool = True, seed: int = 0):
    """All finite Klein modules of order <= max_order, by increasing order.

    With ``dedup`` one module per isomorphism class of (s1, s2) under Aut of
    the group (up to the duplicates described in the module docstring);
    without it, every ordered pair of commuting involutions.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    yield from modules_of_group((), dedup, seed)
    for order in range(2, max_order + 1):
        for orders in abelian_groups(order):
            yield from modules_of_group(orders, dedup, seed)


def count_modules(max_order: int, dedup: bool = True, seed: int = 0) -> int:
    return sum(1 for _ in enumerate_modules(max_order, dedup, seed))


__all__ = [
    "abelian_groups",
    "aut_generators",
    "centralizer_generators",
    "commuting_involution_pairs",
    "count_modules",
    "end_size",
    "enumerate_modules",
    "involutions",
    "modules_of_group",
    "partitions",
    "random_automorphisms",
]
