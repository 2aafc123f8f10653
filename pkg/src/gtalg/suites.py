"""Verification sweeps shared by the test-suite and the command line.

Each suite returns a plain dict with a ``failure_count`` key; zero means pass.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import goldman_turaev as gt
from . import twist
from .exact import f_n_closed_form, f_n_polynomial, geometric_sum_identity
from .morita import verify_54trace
from .tensor import PairTensorElement, TensorElement, symmetrize_N, word_str, words

BIALGEBRA_AXIOMS = (
    "coskew",
    "cojacobi",
    "involutive",
    "compatibility",
    "comodule",
    "bimodule_compat",
    "bimodule_involutive",
)


def _elapsed(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _run_axiom(args) -> dict:
    axiom, genus, max_degree = args
    maps = gt.standard_maps(genus)
    d, mu, br, act = maps["delta"], maps["mu"], maps["bracket"], maps["action"]
    if axiom == "coskew":
        bad = gt.check_coskew(d, genus, max_degree)
    elif axiom == "cojacobi":
        bad = gt.check_cojacobi(d, genus, max_degree)
    elif axiom == "involutive":
        bad = gt.check_involutive(d, br, genus, max_degree)
    elif axiom == "compatibility":
        bad = gt.check_compatibility(br, d, genus, max_degree)
    elif axiom == "comodule":
        bad = gt.check_comodule(mu, d, genus, max_degree)
    elif axiom == "bimodule_compat":
        bad = gt.check_bimodule_compat(act, mu, d, br, genus, max_degree)
    elif axiom == "bimodule_involutive":
        bad = gt.check_bimodule_involutive(act, mu, genus, max_degree)
    else:
        raise ValueError(f"unknown axiom {axiom!r}")
    return gt.checker_report(axiom, genus, max_degree, bad)


def _map(fn, items, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def verify_bialgebra(genus: int = 1, max_degree: int = 6, axioms=BIALGEBRA_AXIOMS, jobs: int = 1) -> dict:
    start = time.perf_counter()
    reports = _map(_run_axiom, [(a, genus, max_degree) for a in axioms], jobs)
    return {
        "suite": "bialgebra",
        "genus": genus,
        "max_degree": max_degree,
        "axioms": {r["axiom"]: {"violations": len(r["violations"]), "first": r["violations"][:1]} for r in reports},
        "failure_count": sum(len(r["violations"]) for r in reports),
        "elapsed_ms": _elapsed(start),
    }


def expected_mu_zero(w, genus: int) -> PairTensorElement:
    """-1/2 (1 (x) N(w))."""
    n_w = symmetrize_N(TensorElement.word(genus, tuple(w)))
    return PairTensorElement(genus, {((), v): -Fraction(1, 2) * c for v, c in n_w.terms.items()})


def mu_zero_words(genus: int, max_degree: int, n_random: int = 0, seed: int = 0) -> list:
    """Every word of degree 1..max_degree, or ``n_random`` seeded random ones."""
    if not n_random:
        return [w for m in range(1, max_degree + 1) for w in words(genus, m)]
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(n_random):
        m = rng.randint(1, max_degree)
        out.append(tuple(rng.randrange(2 * genus) for _ in range(m)))
    return out


def verify_mu_zero(genus: int = 1, max_degree: int = 5, n_random: int = 0, seed: int = 0) -> dict:
    """The constant term identity, both routes, plus the expansion-independent Laurent terms."""
    start = time.perf_counter()
    failures = []
    counts = {"mu_zero": 0, "mu_zero_reference": 0, "laurent_minus1": 0, "laurent_zero": 0, "laurent_minus2": 0}
    ws = mu_zero_words(genus, max_degree, n_random, seed)
    for w in ws:
        expected = expected_mu_zero(w, genus)
        checks = {
            "mu_zero": gt.mu_theta_0(w, genus) == expected,
            "mu_zero_reference": gt.mu_theta_0_reference(w, genus) == expected,
            "laurent_minus1": gt.delta_theta_part(-1, w, genus).is_zero(),
            "laurent_zero": gt.delta_theta_part(0, w, genus).is_zero(),
            "laurent_minus2": gt.delta_theta_part(-2, w, genus) == gt.schedler_delta(w, genus),
        }
        for name, ok in checks.items():
            if not ok:
                counts[name] += 1
                if len(failures) < 5:
                    failures.append({"check": name, "word": word_str(w)})
    return {
        "suite": "mu-zero",
        "genus": genus,
        "max_degree": max_degree,
        "random": n_random or None,
        "seed": seed if n_random else None,
        "checked": len(ws),
        "failures_by_check": counts,
        "failures": failures,
        "failure_count": sum(counts.values()),
        "elapsed_ms": _elapsed(start),
    }


def verify_fn(max_n: int = 12) -> dict:
    start = time.perf_counter()
    bad = []
    for n in range(1, max_n + 1):
        lhs, rhs = geometric_sum_identity(n)
        if lhs != rhs:
            bad.append({"n": n, "part": "geometric sum"})
        if f_n_polynomial(n) != f_n_closed_form(n):
            bad.append({"n": n, "part": "closed form"})
    return {"suite": "fn", "max_n": max_n, "failures": bad[:5], "failure_count": len(bad), "elapsed_ms": _elapsed(start)}


def _corpus_chunk(args) -> dict:
    codes, order = args
    return twist.corpus_report([twist.GaussCode.from_json(c) for c in codes], order)


def verify_obstruction_corpus(n: int = 200, max_crossings: int = 5, seed: int = 0, order: int = 4, jobs: int = 1) -> dict:
    start = time.perf_counter()
    codes = [c.to_json() for c in twist.random_corpus(n, max_crossings, seed)]
    size = max(1, -(-len(codes) // max(jobs, 1)))
    chunks = [(codes[i:i + size], order) for i in range(0, len(codes), size)]
    parts = _map(_corpus_chunk, chunks, jobs)
    failures = []
    offset = 0
    for (chunk, _), part in zip(chunks, parts):
        for f in part["failures"]:
            failures.append(dict(f, index=f["index"] + offset))
        offset += len(chunk)
    return {
        "suite": "obstruction-corpus",
        "n": n,
        "max_crossings": max_crossings,
        "seed": seed,
        "order": order,
        "checked": sum(p["checked"] for p in parts),
        "failures": failures[:5],
        "failure_count": sum(p["failure_count"] for p in parts),
        "elapsed_ms": _elapsed(start),
    }


def verify_trace(genus: int = 2, m: int = 3, mode: str = "exhaustive", n: int = 100, seed: int = 0) -> dict:
    report = verify_54trace(genus, m, mode, n, seed)
    report["suite"] = "54trace"
    return report
