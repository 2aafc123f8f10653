"""Morita traces and the symmetric-power maps used to compare them with the cobracket.

Symmetric tensors are TensorElements whose words are sorted (see ``sym_project``).
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from . import kernels
from .exact import format_fraction
from .derivations import DerivationElement, lplus_generator
from .goldman_turaev import delta_alg
from .tensor import (
    PairTensorElement,
    TensorElement,
    c12_contract,
    dynkin_phi,
    letters,
    sym_project,
    word_str,
    words,
)


def morita_trace(k: int, d) -> TensorElement:
    """Tr_k: (-1)^k times the first-slot contraction, projected to Sym^(k-1)."""
    t = d.tensor() if isinstance(d, DerivationElement) else d
    if t.is_zero():
        return t
    if t.degrees() != [k + 1]:
        raise ValueError(f"Tr_{k} needs a homogeneous element of degree {k + 1}, got degrees {t.degrees()}")
    return sym_project(c12_contract(t)) * (-1) ** k


def s_map(pt: PairTensorElement) -> TensorElement:
    """Keep terms with a single letter in the first slot, multiply it in, symmetrize."""
    out: dict = {}
    for (u, v), c in pt.terms.items():
        if len(u) != 1:
            continue
        key = tuple(sorted(u + v))
        out[key] = out.get(key, 0) + c
    return TensorElement(pt.genus, out)


def _four_term(y: int, z: int, t: TensorElement, i: int, j: int) -> TensorElement:
    # -(Y.X_i) Z (rest) - (Y.X_j) Z (rest) + (Z.X_i) Y (rest) + (Z.X_j) Y (rest)
    out: dict = {}
    pr = kernels.pairing
    for w, c in t.terms.items():
        m = len(w)
        for pos in (i % m, j % m):
            x = w[pos]
            rest = w[:pos] + w[pos + 1:]
            for letter_, other, sign in ((y, z, -1), (z, y, 1)):
                k = pr(letter_, x)
                if k:
                    key = tuple(sorted(rest + (other,)))
                    out[key] = out.get(key, 0) + sign * k * c
    return TensorElement(t.genus, out)


def _homogeneous_degree(t: TensorElement, minimum: int) -> int:
    degs = t.degrees()
    if not degs:
        return 0
    if len(degs) != 1 or degs[0] < minimum:
        raise ValueError(f"expected a homogeneous tensor of degree >= {minimum}, got degrees {degs}")
    return degs[0]


def beta_map(y: int, z: int, t: TensorElement) -> TensorElement:
    """Contract Y or Z against the first or the last letter."""
    if not _homogeneous_degree(t, 1):
        return t
    return _four_term(y, z, t, 0, -1)


def gamma_map(y: int, z: int, t: TensorElement) -> TensorElement:
    """Contract Y or Z against the second or the second-to-last letter."""
    if not _homogeneous_degree(t, 2):
        return t
    return _four_term(y, z, t, 1, -2)


def alpha_map(y: int, z: int, t: TensorElement) -> TensorElement:
    return gamma_map(y, z, t) - beta_map(y, z, t)


def phi_word(genus: int, w) -> TensorElement:
    return dynkin_phi(TensorElement.word(genus, tuple(w)))


def trace_sides(y: int, z: int, w, genus: int) -> tuple:
    """(s(delta(d)), (-1)^m m Tr_{m+1}(d), (-1)^(m+1) beta(Phi(w)), Tr_{m+1}(d)) for d = N([Y,Z]Phi(w))."""
    w = tuple(w)
    m = len(w)
    d = lplus_generator(y, z, w, genus)
    lhs = s_map(delta_alg(d))
    tr = morita_trace(m + 1, d) if not d.is_zero() else TensorElement.zero(genus)
    rhs = tr * ((-1) ** m * m)
    via_beta = beta_map(y, z, phi_word(genus, w)) * (-1) ** (m + 1)
    return lhs, rhs, via_beta, tr


def _samples(genus: int, m: int, mode: str, n: int, seed: int):
    if mode == "exhaustive":
        for y in letters(genus):
            for z in letters(genus):
                for w in words(genus, m):
                    yield y, z, w
    elif mode == "random":
        rng = random.Random(seed)
        for _ in range(n):
            y = rng.randrange(2 * genus)
            z = rng.randrange(2 * genus)
            w = tuple(rng.randrange(2 * genus) for _ in range(m))
            yield y, z, w
    else:
        raise ValueError(f"unknown mode {mode!r}")


def verify_54trace(genus: int, m: int, mode: str = "exhaustive", n: int = 100, seed: int = 0) -> dict:
    """Check s(delta(N([Y,Z]Phi(w)))) == (-1)^m m Tr_{m+1}(N([Y,Z]Phi(w))) on samples.

    The trace is also cross-checked against (-1)^(m+1) beta(Phi(w)) on every sample.
    """
    if m < 3:
        raise ValueError("the trace identity is stated for m >= 3")
    start = time.perf_counter()
    checked = 0
    failures = []
    trace_mismatch = []
    nonzero = 0
    ratios: set = set()
    for y, z, w in _samples(genus, m, mode, n, seed):
        lhs, rhs, via_beta, tr = trace_sides(y, z, w, genus)
        checked += 1
        if not lhs.is_zero() or not rhs.is_zero():
            nonzero += 1
        if tr != via_beta:
            trace_mismatch.append(_case(y, z, w, tr, via_beta))
        if lhs != rhs:
            failures.append(_case(y, z, w, lhs, rhs))
        if not tr.is_zero():
            r = ratio_if_proportional(lhs, tr)
            ratios.add("none" if r is None else format_fraction(r))
    return {
        "theorem": "54trace",
        "genus": genus,
        "m": m,
        "mode": mode,
        "seed": seed if mode == "random" else None,
        "checked": checked,
        "nonzero_cases": nonzero,
        "failures": failures[:5],
        "failure_count": len(failures),
        "trace_beta_mismatches": len(trace_mismatch),
        "expected_ratio": format_fraction(Fraction((-1) ** m * m)),
        "observed_ratios": sorted(ratios),
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }


def _case(y, z, w, lhs, rhs) -> dict:
    return {
        "Y": word_str((y,)),
        "Z": word_str((z,)),
        "w": word_str(tuple(w)),
        "lhs": str(lhs),
        "rhs": str(rhs),
    }


def ratio_if_proportional(a: TensorElement, b: TensorElement):
    """The scalar r with a == r*b, or None."""
    if b.is_zero():
        return Fraction(0) if a.is_zero() else None
    w, c = next(iter(b.terms.items()))
    r = a.coeff(w) / c
    return r if a == b * r else None
