"""Time the compiled word kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import itertools
import timeit

from gtalg import _kernels_py

try:
    from gtalg import _kernels
except ImportError:  # extension not built
    _kernels = None


def workload(genus: int, degree: int) -> list:
    return list(itertools.product(range(2 * genus), repeat=degree))


def cases(mod, ws):
    return {
        "schedler": lambda: [mod.schedler(w) for w in ws],
        "mu_alg": lambda: [mod.mu_alg(w) for w in ws],
        "mu_zero_scaled": lambda: [mod.mu_zero_scaled(w) for w in ws],
        "dynkin": lambda: [mod.dynkin(w) for w in ws],
        "coproduct": lambda: [mod.coproduct(w) for w in ws],
        "derive_word": lambda: [mod.derive_word(w[:3], w) for w in ws],
    }


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--genus", type=int, default=2)
    ap.add_argument("--degree", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    ws = workload(a.genus, a.degree)
    print(f"{len(ws)} words, genus {a.genus}, degree {a.degree}")
    py = cases(_kernels_py, ws)
    cy = cases(_kernels, ws) if _kernels else {}
    print(f"{'kernel':<16}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, fn in py.items():
        tp = min(timeit.repeat(fn, number=1, repeat=a.repeat))
        if name in cy:
            if cy[name]() != fn():
                raise SystemExit(f"{name}: backends disagree")
            tc = min(timeit.repeat(cy[name], number=1, repeat=a.repeat))
            print(f"{name:<16}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x")
        else:
            print(f"{name:<16}{tp:>10.3f}{'n/a':>10}")


if __name__ == "__main__":
    main()
