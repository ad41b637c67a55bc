"""Finite Z[G]-modules for the Klein four-group G = <s1, s2>."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np

from ..errors import InvalidModule
from ._common import digits_table, table, weights


def _normalize(mat, orders, name):
    k = len(orders)
    rows = [list(r) for r in mat]
    if len(rows) != k or any(len(r) != k for r in rows):
        raise InvalidModule(f"{name} must be a {k}x{k} matrix")
    return tuple(tuple(int(v) % orders[i] for v in row) for i, row in enumerate(rows))


@dataclass(frozen=True)
class FiniteKleinModule:
    """Abelian group Z/n_1 + ... + Z/n_k with two commuting involutive automorphisms.

    ``s1`` and ``s2`` act on exponent vectors: column j is the image of the
    j-th generator. Row i is reduced mod n_i on construction.
    """

    group: tuple
    s1: tuple
    s2: tuple

    def __post_init__(self):
        orders = tuple(int(n) for n in self.group)
        if any(n < 1 for n in orders):
            raise InvalidModule(f"cyclic orders must be positive, got {orders}")
        object.__setattr__(self, "group", orders)
        object.__setattr__(self, "s1", _normalize(self.s1, orders, "s1"))
        object.__setattr__(self, "s2", _normalize(self.s2, orders, "s2"))
        for name, mat in (("s1", self.s1), ("s2", self.s2)):
            for i, row in enumerate(mat):
                for j, v in enumerate(row):
                    # generator j has order n_j, so its image must too
                    if (v * orders[j]) % orders[i]:
                        raise InvalidModule(f"{name}[{i}][{j}] = {v} is not well defined on Z/{orders[j]}")
        ident = np.arange(self.order)
        t1, t2 = self.table1, self.table2
        for name, t in (("s1", t1), ("s2", t2)):
            if len(np.unique(t)) != self.order:
                raise InvalidModule(f"{name} is not bijective")
            if not np.array_equal(t[t], ident):
                raise InvalidModule(f"{name} is not an involution")
        if not np.array_equal(t1[t2], t2[t1]):
            raise InvalidModule("s1 and s2 do not commute")

    @property
    def order(self) -> int:
        return prod(self.group)

    @cached_property
    def table1(self) -> np.ndarray:
        return table(np.array(self.s1, dtype=np.int64).reshape(len(self.group), len(self.group)), self.group)

    @cached_property
    def table2(self) -> np.ndarray:
        return table(np.array(self.s2, dtype=np.int64).reshape(len(self.group), len(self.group)), self.group)

    def digits(self, x: int) -> tuple:
        if not self.group:
            return ()
        return tuple(int(d) for d in digits_table(self.group)[x])

    def index(self, exponents) -> int:
        exps = [int(e) % n for e, n in zip(exponents, self.group)]
        return int(np.dot(exps, weights(self.group))) if exps else 0

    def render(self, x: int) -> str:
        """Multiplicative form of element x, e.g. ``g1^2*g3``; identity is ``1``."""
        parts = []
        for j, d in enumerate(self.digits(x), 1):
            if d:
                parts.append(f"g{j}" if d == 1 else f"g{j}^{d}")
        return "*".join(parts) or "1"

    def to_json(self) -> dict:
        return {
            "group": list(self.group),
            "s1": [list(r) for r in self.s1],
            "s2": [list(r) for r in self.s2],
        }

    def __str__(self):
        grp = " x ".join(f"Z/{n}" for n in self.group) or "1"
        return f"{grp}, s1={[list(r) for r in self.s1]}, s2={[list(r) for r in self.s2]}"
