"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload runs on every available backend; results must agree and the
table reports the best wall time of ``--repeat`` runs plus the speed-up.
"""

from __future__ import annotations

import argparse
import time

from circol import generators as gen
from circol import kernels
from circol.cycles import circumference, longest_path_order
from circol.extremal import build_extremal, check_forced_degree


def workloads(quick: bool):
    petersen = gen.petersen()
    closure = gen.tree_closure(3, 3) if quick else gen.tree_closure(4, 3)
    randoms = [gen.random_graph(14, 0.35, s) for s in range(10 if quick else 40)]
    extremal = build_extremal(3, 2)

    def raw_cycle(G):
        return lambda b: b.longest_cycle(G.n, *G.csr())

    return [
        ("longest cycle, Petersen", raw_cycle(petersen)),
        ("longest cycle, wheel(18)", raw_cycle(gen.wheel(18))),
        (f"circumference, tree closure n={closure.n}", lambda b: circumference(closure, b)),
        (f"circumference, {len(randoms)} random n=14", lambda b: [circumference(G, b) for G in randoms]),
        ("longest path, G_{3,2}", lambda b: longest_path_order(extremal, b)),
        ("forced degree, G_{2,3}", lambda b: check_forced_degree(2, 3, backend=b).holds),
        ("forced degree, G_{3,2}", lambda b: check_forced_degree(3, 2, backend=b).holds),
    ]


def best_time(fn, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args(argv)

    backends = kernels.available()
    names = sorted(backends)
    print(f"backends: {', '.join(names)} (active: {kernels.BACKEND})")
    print(f"{'workload':42s}" + "".join(f"{n:>12s}" for n in names) + f"{'speed-up':>10s}")
    for label, fn in workloads(args.quick):
        times = {}
        results = {}
        for name in names:
            times[name], results[name] = best_time(fn, backends[name], args.repeat)
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        row = f"{label:42s}" + "".join(f"{times[n]:11.4f}s" for n in names)
        if "cython" in times:
            row += f"{times['python'] / max(times['cython'], 1e-9):9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
