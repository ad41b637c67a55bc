"""Brute-force verification over small finite Z[G]-modules, G the Klein four-group."""

from .checks import (
    FAIL,
    PASS,
    SKIPPED,
    Theorem3Report,
    check_implication,
    check_kernel_equality,
    check_qh90,
    verify_theorem3,
)
from .enumeration import abelian_groups, enumerate_modules
from .kernels import BACKEND
from .module import FiniteKleinModule

__all__ = [
    "BACKEND",
    "FAIL",
    "PASS",
    "SKIPPED",
    "FiniteKleinModule",
    "Theorem3Report",
    "abelian_groups",
    "check_implication",
    "check_kernel_equality",
    "check_qh90",
    "enumerate_modules",
    "verify_theorem3",
]
