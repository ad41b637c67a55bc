"""Compiled vs numpy module-lab kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--sweep 32]

Both backends get identical inputs and their outputs are compared before
anything is timed.
"""

import argparse
import time

import numpy as np

from biquad.modlab import _core_py
from biquad.modlab.enumeration import aut_generators, enumerate_modules, involutions

try:
    from biquad.modlab import _core
except ImportError:
    _core = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def sample_modules(max_order):
    return [M for M in enumerate_modules(max_order) if M.order >= max_order // 2]


def module_kernels(impl, mods):
    for M in mods:
        impl.qh90_check(M.group, M.table1)
        impl.kernel_equality(M.group, M.table1, M.table2)
        impl.implication(M.group, M.table1, M.table2)


def check_agreement(mods, groups):
    for M in mods:
        args = (M.group, M.table1, M.table2)
        assert tuple(_core.kernel_equality(*args)) == tuple(_core_py.kernel_equality(*args)), M
        assert tuple(_core.implication(*args)) == tuple(_core_py.implication(*args)), M
        assert tuple(_core.qh90_check(M.group, M.table1)) == tuple(_core_py.qh90_check(M.group, M.table1)), M
    for g in groups:
        assert np.array_equal(_core.end_involutions(g), _core_py.end_involutions(g)), g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sweep", type=int, default=32, help="max |M| for the per-module kernels")
    args = ap.parse_args()
    if _core is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    mods = sample_modules(args.sweep)
    groups = [(4, 4), (8, 4), (4, 2, 2), (2, 2, 2, 2), (4, 4, 2)]
    check_agreement(mods, groups)

    rows = []
    rows.append(
        (f"per-module kernels, {len(mods)} modules",)
        + tuple(best_of(lambda i=impl: module_kernels(i, mods), args.repeat) for impl in (_core, _core_py))
    )
    for g in groups:
        rows.append(
            (f"end_involutions {g}",)
            + tuple(best_of(lambda i=impl: i.end_involutions(g), args.repeat) for impl in (_core, _core_py))
        )
    for g in [(4, 4, 2), (2,) * 5]:
        codes = involutions(g)
        gens = aut_generators(g, np.random.default_rng(0))
        inv = [np.asarray(x) for x in gens[1]]
        fwd = [np.asarray(x) for x in gens[0]]
        a = _core.orbit_labels(codes, g, fwd, inv)
        b = _core_py.orbit_labels(codes, g, fwd, inv)
        assert np.array_equal(a, b), g
        rows.append(
            (f"orbit_labels {g}, {len(codes)} involutions",)
            + tuple(best_of(lambda i=impl: i.orbit_labels(codes, g, fwd, inv), args.repeat) for impl in (_core, _core_py))
        )

    print(f"{'kernel':<48}{'cython':>10}{'numpy':>10}{'ratio':>8}")
    for name, tc, tp in rows:
        print(f"{name:<48}{tc:>9.4f}s{tp:>9.4f}s{tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
