"""Command-line front end.

Exit status: 0 on success, 1 on a domain error, 2 on a usage or parse error.
Errors are printed as ``{"error": kind, "message": ...}``. JSON output is
compact with a fixed key order, so identical invocations give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .errors import BiquadError, DivisionByZero, ParseError
from .field import GaloisElement, format_element, make_field, norm, subfield_membership
from .group_ring import act
from .hilbert90 import coboundary_witness, crossed_hom_check, kernel_membership, qh90_witness
from .parsing import parse_element, parse_group_ring, parse_quad
from .qforms import pythagorean_triple, qform_decompose
from .rational import format_rational, parse_rational, rational_json


class UsageError(Exception):
    """Bad input detected before any domain computation."""

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind
        self.message = message


def _parsing(fn, *args):
    try:
        return fn(*args)
    except (ParseError, DivisionByZero) as exc:
        raise UsageError(exc.kind, exc.message) from exc


def _rational_arg(text, name):
    try:
        return parse_rational(text)
    except (ValueError, DivisionByZero) as exc:
        raise UsageError("ParseError", f"--{name}: {exc}") from exc


def _field(args):
    return make_field(_rational_arg(args.a1, "a1"), _rational_arg(args.a2, "a2"))


def _elem(args, cfg, src):
    return _parsing(parse_element, src, cfg)


# -- subcommands: each returns (json object, text lines) --------------------


def cmd_eval(args):
    cfg = _field(args)
    e = _elem(args, cfg, args.element)
    if args.act is not None:
        u = _parsing(parse_group_ring, args.act)
        e = act(u, e)
    flags = subfield_membership(e)
    out = {
        **cfg.to_json(),
        "element": e.to_json(),
        "conjugates": {g.label: e.conj(g).to_json() for g in GaloisElement},
        "norms": {t: norm(t, e).to_json() for t in ("E1", "E2", "E3")},
        "norm_to_Q": rational_json(norm("F_from_E", e).rational()),
        "subfields": flags._asdict(),
    }
    text = [f"element: {format_element(e)}"]
    text += [f"{g.label}: {format_element(e.conj(g))}" for g in GaloisElement]
    text += [f"N_E/{t}: {format_element(norm(t, e))}" for t in ("E1", "E2", "E3")]
    text.append(f"N_E/Q: {format_rational(norm('F_from_E', e).rational())}")
    return out, text


def cmd_h90_witness(args):
    cfg = _field(args)
    t = _elem(args, cfg, args.t)
    ell = qh90_witness(args.i, t)
    out = {**cfg.to_json(), "i": args.i, "t": t.to_json(), "l": ell.to_json()}
    return out, [f"l = {format_element(ell)}"]


def cmd_coboundary(args):
    cfg = _field(args)
    a1 = _elem(args, cfg, args.alpha1)
    a2 = _elem(args, cfg, args.alpha2)
    beta = coboundary_witness(crossed_hom_check(a1, a2))
    out = {**cfg.to_json(), "alpha1": a1.to_json(), "alpha2": a2.to_json(), "beta": beta.to_json()}
    return out, [f"beta = {format_element(beta)}"]


def cmd_kernel(args):
    cfg = _field(args)
    e = _elem(args, cfg, args.element)
    rep = kernel_membership(e)
    out = {**cfg.to_json(), "element": e.to_json(), **rep.to_json()}
    text = [f"in_K{i}: {str(f).lower()}" for i, f in enumerate(rep.flags, 1)]
    if rep.decomposition is not None:
        k1, k2 = rep.decomposition
        text.append(f"k1 = {format_element(k1)}")
        text.append(f"k2 = {format_element(k2)}")
    return out, text


def cmd_qform(args):
    a = _rational_arg(args.a, "a")
    b = _rational_arg(args.b, "b")
    x = _parsing(parse_quad, args.x, b)
    y = _parsing(parse_quad, args.y, b)
    d = qform_decompose(a, b, x, y)
    out = {k: rational_json(getattr(d, k)) for k in ("x1", "y1", "x2", "y2", "value")}
    text = [
        f"({format_rational(d.x1)})^2 - {format_rational(a)}*({format_rational(d.y1)})^2 times "
        f"({format_rational(d.x2)})^2 - {format_rational(a * b)}*({format_rational(d.y2)})^2 "
        f"= {format_rational(d.value)}  [{d.branch}]"
    ]
    return out, text


def cmd_pythagorean(args):
    triple = pythagorean_triple(args.m, args.n)
    return {"triple": list(triple)}, [" ".join(map(str, triple))]


def cmd_module_check(args):
    # imported lazily so the field commands do not pay for numpy/scipy
    from .modlab.checks import verify_theorem3
    from .modlab.enumeration import enumerate_modules

    if args.max_order < 1:
        raise UsageError("UsageError", "--max-order must be at least 1")
    counts = Counter()
    inclusion = True
    for M in enumerate_modules(args.max_order, dedup=not args.no_dedup, seed=args.seed):
        rep = verify_theorem3(M)
        counts[rep.verdict] += 1
        inclusion &= rep.inclusion
        if args.output == "json":
            _emit(rep.to_json())
        else:
            print(f"{M}: qh90={list(rep.qh90)} kernel_eq={rep.kernel_eq} implication={rep.implication} {rep.verdict}")
    total = sum(counts.values())
    print(
        f"modules={total} PASS={counts['PASS']} FAIL={counts['FAIL']} "
        f"SKIPPED={counts['SKIPPED']} inclusion={'ok' if inclusion else 'violated'}",
        file=sys.stderr,
    )
    return None, None


def _emit(obj):
    print(json.dumps(obj, separators=(",", ":")))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="biquad", description="Hilbert 90 witnesses in biquadratic fields")
    p.add_argument("--output", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def field_cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--a1", required=True)
        s.add_argument("--a2", required=True)
        s.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
        return s

    s = field_cmd("eval", "evaluate an element: conjugates, norms, subfields")
    s.add_argument("element")
    s.add_argument("--act", help="group-ring element applied to the element first, e.g. '1 - s1'")
    s.set_defaults(func=cmd_eval)

    s = field_cmd("h90-witness", "l with t = l / sigma_i(l)")
    s.add_argument("--i", type=int, choices=(1, 2, 3), required=True)
    s.add_argument("t")
    s.set_defaults(func=cmd_h90_witness)

    s = field_cmd("coboundary", "beta with alpha_i = beta / sigma_i(beta)")
    s.add_argument("alpha1")
    s.add_argument("alpha2")
    s.set_defaults(func=cmd_coboundary)

    s = field_cmd("kernel", "five-way kernel membership with certificates")
    s.add_argument("element")
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("qform-decompose", help="x^2 - a y^2 = (x1^2 - a y1^2)(x2^2 - ab y2^2)")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_qform)

    s = sub.add_parser("pythagorean", help="triple from m + n*i")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_pythagorean)

    s = sub.add_parser("module-check", help="exhaustive check over small finite modules (JSON lines)")
    s.add_argument("--max-order", type=int, default=64)
    s.add_argument("--no-dedup", action="store_true", help="every ordered pair instead of one per class")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_module_check)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, text = args.func(args)
    except UsageError as exc:
        _emit({"error": exc.kind, "message": exc.message})
        return 2
    except BiquadError as exc:
        _emit({"error": exc.kind, "message": exc.message})
        return 1
    if out is not None:
        if args.output == "json":
            _emit(out)
        else:
            print("\n".join(text))
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
