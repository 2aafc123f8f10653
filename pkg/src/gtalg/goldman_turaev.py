"""Graded pieces of the Turaev cobracket and of the self-intersection map.

All maps take a word ``w = X_1 ... X_m`` and return a :class:`PairTensorElement`.
``schedler_delta(w)`` is the cobracket of the symplectic derivation N(w);
``mu_alg(w)`` and ``mu_theta_0(w)`` take values in T (x) a_g^-, with the
second slot cyclically invariant.

The axiom checkers at the bottom work on any maps with the same shapes and
return the basis inputs on which an axiom fails (empty list: it holds).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from . import kernels
from .derivations import DerivationElement, derive_tensor, raw_bracket
from .tensor import (
    DEFAULT_MAX_DEGREE,
    PairTensorElement,
    TensorElement,
    _same_genus,
    antipode_right,
    bullet_leadsto,
    coproduct,
    letters,
    necklaces,
    omega,
    s_of_omega,
    symmetrize_N,
    word_str,
    words,
)

HALF = Fraction(1, 2)


def _word(w) -> tuple:
    return tuple(w)


# cobracket and self-intersection -------------------------------------------

def schedler_delta(w, genus: int) -> PairTensorElement:
    w = _word(w)
    if not w:
        raise ValueError("word must have degree >= 1")
    return PairTensorElement.from_kernel(genus, kernels.schedler(w))


def delta_alg(d) -> PairTensorElement:
    """Cobracket of a cyclically invariant tensor (or DerivationElement).

    A degree-m invariant tensor t equals N(t/m), so its cobracket is the
    sum of t_w/m * schedler_delta(w).
    """
    t = d.tensor() if isinstance(d, DerivationElement) else d
    out: dict = {}
    for w, c in t.terms.items():
        if not w:
            raise ValueError("degree-0 term in a derivation")
        s = c / len(w)
        for k, v in kernels.schedler(w).items():
            out[k] = out.get(k, 0) + s * v
    return PairTensorElement(t.genus, out)


def mu_alg(w, genus: int) -> PairTensorElement:
    return PairTensorElement.from_kernel(genus, kernels.mu_alg(_word(w)))


def mu_alg_tensor(t: TensorElement) -> PairTensorElement:
    out: dict = {}
    for w, c in t.terms.items():
        for k, v in kernels.mu_alg(w).items():
            out[k] = out.get(k, 0) + c * v
    return PairTensorElement(t.genus, out)


def mu_theta_0(w, genus: int) -> PairTensorElement:
    """Constant Laurent term of mu^theta, from its recursive formula."""
    w = _word(w)
    if not w:
        raise ValueError("word must have degree >= 1")
    return PairTensorElement.from_kernel(genus, kernels.mu_zero_scaled(w), -HALF)


def mu_theta_0_reference(w, genus: int) -> PairTensorElement:
    """Same formula as :func:`mu_theta_0`, built from tensor-level operations.

    Slower; kept as an independent route through coproduct, antipode and N.
    """
    w = _word(w)
    m = len(w)
    total = PairTensorElement(genus)
    for i in range(m):
        for j in range(i + 1, m):
            dxx = antipode_right(coproduct(TensorElement.word(genus, (w[i], w[j]))))
            left = PairTensorElement(genus, {(w[:i], ()): 1})
            right = PairTensorElement(genus, {(w[j + 1:], w[i + 1:j]): 1})
            total = total + (left * dxx * right).map_right(kernels.cyclic_sum)
    for i in range(m):
        left = PairTensorElement(genus, {(w[:i], ()): 1})
        right = PairTensorElement(genus, {(w[i + 1:], ()): 1})
        total = total + left * PairTensorElement(genus, {((), (w[i],)): 1}) * right
    return -HALF * total


def n_left_switch(p: PairTensorElement) -> PairTensorElement:
    """(1 - T)(N (x) 1)."""
    q = p.map_left(kernels.cyclic_sum)
    return q - q.switch()


def delta_theta_part(p: int, w, genus: int) -> PairTensorElement:
    """Laurent term of delta^theta(N(w)) for p in {-2, -1, 0}."""
    if p == -2:
        mu = mu_alg(w, genus)
    elif p == -1:
        mu = PairTensorElement(genus)
    elif p == 0:
        mu = mu_theta_0(w, genus)
    else:
        raise ValueError("only p in {-2, -1, 0} are independent of the expansion")
    return n_left_switch(mu)


# homotopy intersection form, tensorial side ---------------------------------

def rho_truncated(a: TensorElement, b: TensorElement, order: int) -> TensorElement:
    """(a - e(a)) ~> (b - e(b)) + (a - e(a)) s(omega) (b - e(b)), up to degree ``order``."""
    _same_genus(a, b)
    g = a.genus
    a0 = TensorElement(g, {w: c for w, c in a.terms.items() if w}, order)
    b0 = TensorElement(g, {w: c for w, c in b.terms.items() if w}, order)
    if a0.is_zero() or b0.is_zero():
        return TensorElement.zero(g, order)
    return bullet_leadsto(a0, b0) + a0 * s_of_omega(g, order) * b0


def kappa_theta_letters(x: int, y: int, genus: int, order: int) -> PairTensorElement:
    """-(X.Y)(1 (x) 1) - (1 (x) iota) Delta(X s(omega) Y), up to total degree ``order``."""
    xt = TensorElement.word(genus, (x,), 1, order)
    yt = TensorElement.word(genus, (y,), 1, order)
    middle = xt * s_of_omega(genus, order) * yt
    out = -antipode_right(coproduct(middle))
    k = kernels.pairing(x, y)
    if k:
        out = out + PairTensorElement(genus, {((), ()): -k})
    return PairTensorElement(genus, out.terms, order)


# axiom checkers ----------------------------------------------------------------
# A "delta-like" map takes a word w and returns the cobracket of N(w) as a
# PairTensorElement; a "bracket" takes two TensorElements in H (x) T; a
# "mu-like" map takes a word and returns a PairTensorElement in T (x) a_g^-;
# an "action" takes (derivation tensor, tensor) and returns a tensor.

DeltaLike = Callable[[tuple], PairTensorElement]
Bracket = Callable[[TensorElement, TensorElement], TensorElement]


def _delta_on_cyclic(delta: DeltaLike, t: Mapping) -> dict:
    out: dict = {}
    for w, c in t.items():
        s = Fraction(c) / len(w)
        for k, v in delta(w).terms.items():
            out[k] = out.get(k, 0) + s * v
    return out


def _group(terms: Mapping, slot: int) -> dict:
    """Split a multi-slot dict by one slot: slot word -> {rest: coeff}."""
    out: dict = {}
    for k, c in terms.items():
        key = k[slot]
        rest = k[:slot] + k[slot + 1:]
        out.setdefault(key, {})[rest] = c
    return out


def _basis(genus: int, max_degree: int, min_degree: int = 1) -> list:
    return [w for m in range(min_degree, max_degree + 1) for w in necklaces(genus, m)]


def _nonzero(d: Mapping) -> bool:
    return any(v for v in d.values())


def _sub(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def check_coskew(delta: DeltaLike, genus: int, max_degree: int) -> list:
    bad = []
    for w in _basis(genus, max_degree):
        d = delta(w)
        if not (d + d.switch()).is_zero():
            bad.append(w)
    return bad


def _cyclic3(terms: Mapping) -> dict:
    out: dict = {}
    for (a, b, c), v in terms.items():
        for k in ((a, b, c), (b, c, a), (c, a, b)):
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _delta_first(delta: DeltaLike, pair: PairTensorElement) -> dict:
    """(delta (x) 1) applied to a pair whose first slot is cyclically invariant."""
    out: dict = {}
    for right, left_terms in _group(pair.terms, 1).items():
        lt = {k[0]: c for k, c in left_terms.items()}
        for (a, b), c in _delta_on_cyclic(delta, lt).items():
            key = (a, b, right)
            out[key] = out.get(key, 0) + c
    return out


def check_cojacobi(delta: DeltaLike, genus: int, max_degree: int) -> list:
    bad = []
    for w in _basis(genus, max_degree):
        if _cyclic3(_delta_first(delta, delta(w))):
            bad.append(w)
    return bad


def _bracket_pair(bracket: Bracket, genus: int, pair: PairTensorElement) -> dict:
    out: dict = {}
    for (u, v), c in pair.terms.items():
        t = bracket(TensorElement.word(genus, u), TensorElement.word(genus, v))
        for w, k in t.terms.items():
            out[w] = out.get(w, 0) + c * k
    return {k: v for k, v in out.items() if v}


def check_involutive(delta: DeltaLike, bracket: Bracket, genus: int, max_degree: int) -> list:
    return [w for w in _basis(genus, max_degree) if _bracket_pair(bracket, genus, delta(w))]


def _sigma(bracket: Bracket, genus: int, x: TensorElement, pair_terms: Mapping) -> dict:
    """sigma(X)(Y (x) Z) = [X, Y] (x) Z + Y (x) [X, Z], on a pair of cyclic slots."""
    out: dict = {}
    for (u, v), c in pair_terms.items():
        for w, k in bracket(x, TensorElement.word(genus, u)).terms.items():
            out[(w, v)] = out.get((w, v), 0) + c * k
        for w, k in bracket(x, TensorElement.word(genus, v)).terms.items():
            out[(u, w)] = out.get((u, w), 0) + c * k
    return out


def check_compatibility(bracket: Bracket, delta: DeltaLike, genus: int, max_degree: int) -> list:
    """delta[X, Y] = sigma(X) delta(Y) - sigma(Y) delta(X) on pairs of basis N-images.

    ``max_degree`` bounds the sum of the two degrees.
    """
    basis = _basis(genus, max_degree - 1)
    tensors = {w: symmetrize_N(TensorElement.word(genus, w)) for w in basis}
    bad = []
    for i, u in enumerate(basis):
        for v in basis[i:]:
            if len(u) + len(v) > max_degree:
                continue
            x, y = tensors[u], tensors[v]
            br = bracket(x, y)
            lhs = _delta_on_cyclic(delta, br.terms) if br.terms else {}
            dx = _delta_on_cyclic(delta, x.terms)
            dy = _delta_on_cyclic(delta, y.terms)
            rhs = _sub(_sigma(bracket, genus, x, dy), _sigma(bracket, genus, y, dx))
            if _sub(lhs, rhs):
                bad.append((u, v))
    return bad


def check_comodule(mu: DeltaLike, delta: DeltaLike, genus: int, max_degree: int) -> list:
    """(1 (x) delta) mu = (1 (x) (1 - T))(mu (x) 1) mu on all words up to max_degree."""
    bad = []
    for m in range(0, max_degree + 1):
        for w in words(genus, m):
            first = mu(w)
            lhs: dict = {}
            for left, rest in _group(first.terms, 0).items():
                right = {k[0]: c for k, c in rest.items()}
                for (a, b), c in _delta_on_cyclic(delta, right).items():
                    lhs[(left, a, b)] = lhs.get((left, a, b), 0) + c
            rhs: dict = {}
            for (left, u), c in first.terms.items():
                for (l2, v), k in mu(left).terms.items():
                    rhs[(l2, v, u)] = rhs.get((l2, v, u), 0) + c * k
                    rhs[(l2, u, v)] = rhs.get((l2, u, v), 0) - c * k
            if _sub(lhs, rhs):
                bad.append(w)
    return bad


def _act(action, genus: int, d: tuple, target: tuple) -> dict:
    return action(TensorElement.word(genus, d), TensorElement.word(genus, target)).terms


def check_bimodule_compat(action, mu: DeltaLike, delta: DeltaLike, bracket: Bracket,
                          genus: int, max_degree: int) -> list:
    """sigma(Y) mu(m) - mu(Y m) - (sigma-bar (x) 1)(1 (x) delta)(m (x) Y) = 0.

    Y runs over basis N-images, m over words, with deg Y + deg m <= max_degree.
    """
    bad = []
    ys = _basis(genus, max_degree)
    for yw in ys:
        y = symmetrize_N(TensorElement.word(genus, yw))
        dy = _delta_on_cyclic(delta, y.terms)
        for m in range(0, max_degree - len(yw) + 1):
            for w in words(genus, m):
                out: dict = {}
                # (sigma (x) 1)(Y (x) mu(m)) + (1 (x) ad Y) mu(m)
                for (left, u), c in mu(w).terms.items():
                    for l2, k in action(y, TensorElement.word(genus, left)).terms.items():
                        out[(l2, u)] = out.get((l2, u), 0) + c * k
                    for u2, k in bracket(y, TensorElement.word(genus, u)).terms.items():
                        out[(left, u2)] = out.get((left, u2), 0) + c * k
                # - mu(Y m)
                for w2, c in action(y, TensorElement.word(genus, w)).terms.items():
                    for k2, v in mu(w2).terms.items():
                        out[k2] = out.get(k2, 0) - c * v
                # - sigma-bar(m (x) y') (x) y'' = + (y' m) (x) y''
                for (a, b), c in dy.items():
                    for l2, k in _act(action, genus, a, w).items():
                        out[(l2, b)] = out.get((l2, b), 0) + c * k
                if _nonzero(out):
                    bad.append((yw, w))
    return bad


def check_bimodule_involutive(action, mu: DeltaLike, genus: int, max_degree: int) -> list:
    """sigma-bar mu = 0, i.e. sum over mu(m) = m' (x) u of u acting on m' vanishes."""
    bad = []
    for m in range(0, max_degree + 1):
        for w in words(genus, m):
            out: dict = {}
            for (left, u), c in mu(w).terms.items():
                for l2, k in _act(action, genus, u, left).items():
                    out[l2] = out.get(l2, 0) - c * k
            if _nonzero(out):
                bad.append(w)
    return bad


def standard_maps(genus: int) -> dict:
    """The graded maps of this module in the shapes the checkers expect."""
    return {
        "delta": lambda w: schedler_delta(w, genus),
        "mu": lambda w: mu_alg(w, genus),
        "bracket": raw_bracket,
        "action": derive_tensor,
    }


def checker_report(axiom: str, genus: int, max_degree: int, violations: Iterable) -> dict:
    def fmt(v):
        if v and isinstance(v[0], tuple):
            return [word_str(x) for x in v]
        return word_str(v)

    vs = sorted(violations, key=lambda v: (str(type(v[0])) if v else "", v))
    return {"axiom": axiom, "genus": genus, "max_degree": max_degree, "violations": [fmt(v) for v in vs]}
