"""Compare the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``.  Both modules are imported
directly, so the comparison does not depend on ``AEGELFAND_PURE``.
"""

from __future__ import annotations

import argparse
import importlib
import random
import timeit


def _workload(rng: random.Random, degree: int, count: int):
    polys = [[rng.randint(-50, 50) for _ in range(degree)] + [rng.randint(1, 50)] for _ in range(count)]
    points = [(rng.randint(-1000, 1000), rng.randint(1, 1000)) for _ in range(count)]
    return polys, points


def _cases(k, polys, points):
    seqs = [k.sturm_sequence(p) for p in polys]
    return {
        "mul": lambda: [k.mul(p, q) for p, q in zip(polys, polys[1:])],
        "gcd_poly": lambda: [k.gcd_poly(p, k.derivative(p)) for p in polys],
        "sturm_sequence": lambda: [k.sturm_sequence(p) for p in polys],
        "variations": lambda: [k.variations(s, n, d) for s, (n, d) in zip(seqs, points)],
        "sign_at": lambda: [k.sign_at(p, n, d) for p, (n, d) in zip(polys, points)],
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    pure = importlib.import_module("aegelfand.exact._kernels_py")
    try:
        compiled = importlib.import_module("aegelfand.exact._kernels")
    except ImportError:
        compiled = None
        print("compiled extension not built; timing the pure module only")

    polys, points = _workload(random.Random(args.seed), args.degree, args.count)
    if compiled is not None:
        for name, fn in _cases(pure, polys, points).items():
            assert fn() == _cases(compiled, polys, points)[name](), f"backends disagree on {name}"

    print(f"{'kernel':<16}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    py_cases = _cases(pure, polys, points)
    c_cases = _cases(compiled, polys, points) if compiled is not None else {}
    for name, fn in py_cases.items():
        t_py = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        if name in c_cases:
            t_c = min(timeit.repeat(c_cases[name], number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<16}{t_py:>14.2f}{t_c:>16.2f}{t_py / t_c:>9.2f}x")
        else:
            print(f"{name:<16}{t_py:>14.2f}{'-':>16}{'-':>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
