"""Symplectic derivations of the completed tensor algebra.

An element of H (x) T is read as a derivation through the pairing: the word
``Y w`` acts on a letter X by ``X -> (X . Y) w``. The symplectic ones are the
cyclically invariant tensors, i.e. the image of N, graded by word length.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping

from . import kernels
from .linalg import rank
from .tensor import (
    DEFAULT_MAX_DEGREE,
    TensorElement,
    apply_nu,
    commutator,
    dynkin_phi,
    is_primitive,
    letters,
    necklaces,
    omega,
    reduced_coproduct,
    symmetrize_N,
    words,
)


class NotCyclicInvariant(ValueError):
    """A tensor that should lie in the image of N does not."""


def is_cyclic_invariant(t: TensorElement) -> bool:
    return apply_nu(t) == t


class DerivationElement:
    __slots__ = ("genus", "components", "max_degree")

    def __init__(self, genus: int, components: Mapping[int, TensorElement] | None = None,
                 max_degree: int = DEFAULT_MAX_DEGREE, check: bool = True):
        self.genus = genus
        self.max_degree = max_degree
        comps = {}
        for m, t in (components or {}).items():
            m = int(m)
            if t.is_zero() or m > max_degree:
                continue
            if m == 0:
                raise ValueError("derivations have no degree-0 component")
            if t.degrees() != [m]:
                raise ValueError(f"component {m} is not homogeneous of degree {m}")
            if check and not is_cyclic_invariant(t):
                raise NotCyclicInvariant(f"degree-{m} component is not fixed by the cyclic permutation")
            comps[m] = t.with_max_degree(max_degree)
        self.components = comps

    @classmethod
    def from_tensor(cls, t: TensorElement, check: bool = True) -> "DerivationElement":
        comps = {m: t.degree_part(m) for m in t.degrees()}
        return cls(t.genus, comps, t.max_degree, check=check)

    @classmethod
    def n_image(cls, t: TensorElement) -> "DerivationElement":
        """N(t), which is always symplectic."""
        return cls.from_tensor(symmetrize_N(t))

    @classmethod
    def from_word(cls, genus: int, w, coeff=1, max_degree: int = DEFAULT_MAX_DEGREE) -> "DerivationElement":
        return cls.n_image(TensorElement.word(genus, w, coeff, max_degree))

    def tensor(self) -> TensorElement:
        out = TensorElement.zero(self.genus, self.max_degree)
        for t in self.components.values():
            out = out + t
        return out

    def degrees(self) -> list:
        return sorted(self.components)

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        if isinstance(other, DerivationElement):
            return self.genus == other.genus and self.components == other.components
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __add__(self, other: "DerivationElement") -> "DerivationElement":
        return DerivationElement.from_tensor(self.tensor() + other.tensor())

    def __neg__(self) -> "DerivationElement":
        return DerivationElement.from_tensor(-self.tensor(), check=False)

    def __sub__(self, other: "DerivationElement") -> "DerivationElement":
        return self + (-other)

    def __mul__(self, c) -> "DerivationElement":
        return DerivationElement.from_tensor(self.tensor() * Fraction(c), check=False)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DerivationElement(g={self.genus}, {self.tensor()})"

    def to_json(self) -> dict:
        return {"genus": self.genus, "components": {str(m): t.to_json() for m, t in sorted(self.components.items())}}

    @classmethod
    def from_json(cls, data) -> "DerivationElement":
        if isinstance(data, str):
            data = json.loads(data)
        g = int(data["genus"])
        comps = {int(m): TensorElement.from_json(t) for m, t in data["components"].items()}
        md = max([t.max_degree for t in comps.values()], default=DEFAULT_MAX_DEGREE)
        return cls(g, comps, md)


def _as_tensor(d) -> TensorElement:
    return d.tensor() if isinstance(d, DerivationElement) else d


def derive_letter(d, x: int) -> TensorElement:
    """Image of the letter x; d may also be a raw element of H (x) T."""
    t = _as_tensor(d)
    out: dict = {}
    for w, c in t.terms.items():
        if not w:
            continue
        k = kernels.pairing(x, w[0])
        if k:
            rest = w[1:]
            out[rest] = out.get(rest, 0) + c * k
    return TensorElement(t.genus, out, t.max_degree)


def derive_tensor(d, t: TensorElement) -> TensorElement:
    """Leibniz extension of ``derive_letter`` to an arbitrary tensor."""
    dt = _as_tensor(d)
    out: dict = {}
    for dw, dc in dt.terms.items():
        if not dw:
            continue
        for w, c in t.terms.items():
            for w2, k in kernels.derive_word(dw, w).items():
                out[w2] = out.get(w2, 0) + dc * c * k
    return TensorElement(t.genus, out, t.max_degree)


def annihilates_omega(d) -> bool:
    t = _as_tensor(d)
    return derive_tensor(t, omega(t.genus, t.max_degree)).is_zero()


def repack(images: Mapping[int, TensorElement], genus: int, max_degree: int) -> TensorElement:
    """Turn letter images f(x) back into the tensor sum_i B_i f(A_i) - A_i f(B_i)."""
    out: dict = {}
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        for w, c in images[a].terms.items():
            out[(b,) + w] = out.get((b,) + w, 0) + c
        for w, c in images[b].terms.items():
            out[(a,) + w] = out.get((a,) + w, 0) - c
    return TensorElement(genus, out, max_degree)


def raw_bracket(t1: TensorElement, t2: TensorElement) -> TensorElement:
    """Commutator D1 D2 - D2 D1 of the derivations attached to two raw tensors."""
    g = t1.genus
    md = min(t1.max_degree, t2.max_degree)
    images = {}
    for x in letters(g):
        images[x] = derive_tensor(t1, derive_letter(t2, x)) - derive_tensor(t2, derive_letter(t1, x))
    return repack(images, g, md)


def bracket(d1, d2) -> DerivationElement:
    t = raw_bracket(_as_tensor(d1), _as_tensor(d2))
    try:
        return DerivationElement.from_tensor(t)
    except NotCyclicInvariant as exc:
        raise NotCyclicInvariant(f"bracket left the symplectic derivations: {exc}") from None


def is_in_lplus(d: DerivationElement) -> bool:
    if any(m < 3 for m in d.degrees()):
        return False
    return all(is_primitive(derive_letter(d, x)) for x in letters(d.genus))


def lplus_generator(y: int, z: int, w, genus: int, max_degree: int = DEFAULT_MAX_DEGREE) -> DerivationElement:
    """N([Y, Z] Phi(w))."""
    w = tuple(w)
    if len(w) < 1:
        raise ValueError("w must have degree >= 1")
    yz = commutator(TensorElement.word(genus, (y,), 1, max_degree), TensorElement.word(genus, (z,), 1, max_degree))
    phi = dynkin_phi(TensorElement.word(genus, w, 1, max_degree))
    return DerivationElement.n_image(yz * phi)


def necklace_basis(genus: int, degree: int, max_degree: int = DEFAULT_MAX_DEGREE) -> list:
    """N(w) for one representative w of each cyclic word of the given degree."""
    return [DerivationElement.from_word(genus, w, 1, max_degree) for w in necklaces(genus, degree)]


def lplus_brute_force_rank(genus: int, degree: int) -> int:
    """Dimension of {d in N(H^degree) : d(x) primitive for every letter x}."""
    basis = [d.tensor() for d in necklace_basis(genus, degree)]
    # linear map: coefficients on the necklace basis -> reduced coproducts of all letter images
    columns = []
    for t in basis:
        col: dict = {}
        for x in letters(genus):
            for (a, b), c in reduced_coproduct(derive_letter(t, x)).terms.items():
                col[(x, a, b)] = c
        columns.append(col)
    keys = sorted({k for col in columns for k in col})
    matrix = [[col.get(k, 0) for col in columns] for k in keys]
    return len(basis) - rank(matrix) if keys else len(basis)


def lplus_generator_rank(genus: int, degree: int) -> int:
    """Rank of the span of N([Y, Z] Phi(w)) over letters Y, Z and words w of degree - 2."""
    vectors = []
    for y in letters(genus):
        for z in letters(genus):
            if y == z:
                continue
            for w in words(genus, degree - 2):
                vectors.append(lplus_generator(y, z, w, genus).tensor().terms)
    keys = sorted({k for v in vectors for k in v})
    return rank([[v.get(k, 0) for k in keys] for v in vectors])


def random_n_image(genus: int, degree: int, rng, n_terms: int = 3, max_degree: int = DEFAULT_MAX_DEGREE) -> DerivationElement:
    terms: dict = {}
    for _ in range(n_terms):
        w = tuple(rng.randrange(2 * genus) for _ in range(degree))
        terms[w] = terms.get(w, 0) + rng.randint(-3, 3)
    return DerivationElement.n_image(TensorElement(genus, terms, max_degree))


def span_rank(elements: Iterable[DerivationElement]) -> int:
    vecs = [e.tensor().terms for e in elements]
    keys = sorted({k for v in vecs for k in v})
    return rank([[v.get(k, 0) for k in keys] for v in vecs])
