"""Exact arithmetic and constructive Hilbert 90 witnesses for E = Q(sqrt(a1), sqrt(a2))."""

from .errors import BiquadError
from .field import (
    BiquadConfig,
    ExtElement,
    GaloisElement,
    ext_arith,
    format_element,
    galois_apply,
    make_field,
    norm,
    subfield_membership,
)
from .group_ring import GroupRingElement, act, gr_arith
from .hilbert90 import (
    CrossedHom,
    KernelReport,
    coboundary_witness,
    crossed_hom_check,
    in_kernel_composite,
    kernel_decompose,
    kernel_membership,
    norm_product_witness,
    qh90_witness,
)
from .parsing import parse_element, parse_group_ring, parse_quad
from .qforms import QFormDecomposition, QuadExtElement, pythagorean_triple, qform_decompose, qform_value, quad
from .rational import Rational, format_rational, parse_rational, rational_arith, to_rational

__version__ = "0.1.0"

__all__ = [
    "BiquadConfig",
    "BiquadError",
    "CrossedHom",
    "ExtElement",
    "GaloisElement",
    "GroupRingElement",
    "KernelReport",
    "QFormDecomposition",
    "QuadExtElement",
    "Rational",
    "act",
    "coboundary_witness",
    "crossed_hom_check",
    "ext_arith",
    "format_element",
    "format_rational",
    "galois_apply",
    "gr_arith",
    "in_kernel_composite",
    "kernel_decompose",
    "kernel_membership",
    "make_field",
    "norm",
    "norm_product_witness",
    "parse_element",
    "parse_group_ring",
    "parse_quad",
    "parse_rational",
    "pythagorean_triple",
    "qform_decompose",
    "qform_value",
    "qh90_witness",
    "quad",
    "rational_arith",
    "subfield_membership",
    "to_rational",
]
