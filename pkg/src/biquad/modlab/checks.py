"""Exhaustive checks of QH90, kernel equality and the three-condition implication."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import TooLarge
from . import kernels
from .module import FiniteKleinModule

DEFAULT_BOUND = 4096

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


def _guard(M: FiniteKleinModule, bound: int):
    if M.order > bound:
        raise TooLarge(f"|M| = {M.order} exceeds the enumeration bound {bound}")


def check_qh90(M: FiniteKleinModule, bound: int = DEFAULT_BOUND) -> tuple[bool, bool]:
    """ker(1 + s_i) inside im(1 - s_i), for i = 1, 2."""
    _guard(M, bound)
    return (
        kernels.qh90_check(M.group, M.table1)[0],
        kernels.qh90_check(M.group, M.table2)[0],
    )


def kernel_equality_detail(M: FiniteKleinModule, bound: int = DEFAULT_BOUND) -> tuple[bool, bool, int]:
    """(equal, inclusion, witness) comparing ker(1-s1)(1-s2) with ker(1-s1)*ker(1-s2).

    ``inclusion`` is the containment of the product set in the composite
    kernel; ``witness`` is an element of the symmetric difference or -1.
    """
    _guard(M, bound)
    eq, inc, w = kernels.kernel_equality(M.group, M.table1, M.table2)
    return bool(eq), bool(inc), int(w)


def check_kernel_equality(M: FiniteKleinModule, bound: int = DEFAULT_BOUND) -> bool:
    return kernel_equality_detail(M, bound)[0]


def implication_detail(M: FiniteKleinModule, bound: int = DEFAULT_BOUND) -> tuple[bool, int, int]:
    _guard(M, bound)
    ok, m1, m2 = kernels.implication(M.group, M.table1, M.table2)
    return bool(ok), int(m1), int(m2)


def check_implication(M: FiniteKleinModule, bound: int = DEFAULT_BOUND) -> bool:
    """Every (m1, m2) with (1+s1)m1 = 1 = (1+s2)m2 and m1*s1(m2) = m2*s2(m1) has a common n."""
    return implication_detail(M, bound)[0]


@dataclass(frozen=True)
class Theorem3Report:
    module: FiniteKleinModule
    qh90: tuple
    kernel_eq: bool
    inclusion: bool
    implication: bool
    verdict: str
    certificate: Optional[dict] = field(default=None)

    def to_json(self) -> dict:
        out = self.module.to_json()
        out["qh90"] = list(self.qh90)
        out["kernel_eq"] = self.kernel_eq
        out["inclusion"] = self.inclusion
        out["implication"] = self.implication
        out["verdict"] = self.verdict
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def verify_theorem3(M: FiniteKleinModule, bound: int = DEFAULT_BOUND) -> Theorem3Report:
    """Compare kernel equality with the implication; the comparison is only binding under QH90."""
    qh = check_qh90(M, bound)
    eq, inc, w = kernel_equality_detail(M, bound)
    imp, m1, m2 = implication_detail(M, bound)
    cert = None
    if not all(qh):
        verdict = SKIPPED
    elif eq == imp:
        verdict = PASS
    else:
        verdict = FAIL
        if not eq:
            cert = {"kernel_element": M.render(w)}
        else:
            cert = {"m1": M.render(m1), "m2": M.render(m2)}
    return Theorem3Report(M, qh, eq, inc, imp, verdict, cert)
