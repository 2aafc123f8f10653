"""Truncated tensors over the symplectic space H with basis A_1, B_1, ..., A_g, B_g.

Letters are small ints: ``A_i -> 2(i-1)`` and ``B_i -> 2(i-1) + 1``, so integer
order is the documented letter order A_1 < B_1 < A_2 < B_2 < ... . A word is
a tuple of letters; the empty tuple is the unit. The intersection pairing is
(A_i . B_i) = 1, which makes omega correspond to minus the identity of H.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from itertools import product as _cartesian
from typing import Callable, Iterable, Iterator, Mapping

from . import kernels
from .exact import format_fraction, parse_fraction, s_series

DEFAULT_MAX_DEGREE = 16

_LETTER_RE = re.compile(r"([abAB])(\d+)")


class ParseError(ValueError):
    pass


# letters and words ------------------------------------------------------

def letter(kind: str, index: int) -> int:
    kind = kind.upper()
    if kind not in ("A", "B") or index < 1:
        raise ParseError(f"bad letter {kind}{index}")
    return 2 * (index - 1) + (kind == "B")


def letter_name(x: int) -> str:
    return f"{'ab'[x & 1]}{x // 2 + 1}"


def letter_index(x: int) -> int:
    return x // 2 + 1


def letters(genus: int) -> range:
    return range(2 * genus)


def pairing(x: int, y: int) -> int:
    return kernels.pairing(x, y)


def parse_word(text, genus: int | None = None) -> tuple:
    """Parse ``"a1b1a2"`` or ``["a1", "b1"]`` into a word."""
    if isinstance(text, (list, tuple)):
        chunks = [str(t) for t in text]
        out = []
        for c in chunks:
            m = _LETTER_RE.fullmatch(c.strip())
            if not m:
                raise ParseError(f"bad letter {c!r}")
            out.append(letter(m.group(1), int(m.group(2))))
    else:
        s = str(text).replace(" ", "").replace("*", "")
        if s in ("", "1", "e"):
            out = []
        else:
            out = []
            pos = 0
            for m in _LETTER_RE.finditer(s):
                if m.start() != pos:
                    raise ParseError(f"cannot parse word {text!r}")
                out.append(letter(m.group(1), int(m.group(2))))
                pos = m.end()
            if pos != len(s):
                raise ParseError(f"cannot parse word {text!r}")
    if genus is not None:
        for x in out:
            if letter_index(x) > genus:
                raise ParseError(f"letter {letter_name(x)} out of range for genus {genus}")
    return tuple(out)


def word_str(w: tuple) -> str:
    return "".join(letter_name(x) for x in w) if w else "1"


def words(genus: int, degree: int) -> Iterator[tuple]:
    return _cartesian(letters(genus), repeat=degree)


def necklaces(genus: int, degree: int) -> Iterator[tuple]:
    """Lexicographically minimal rotation of each cyclic word."""
    for w in words(genus, degree):
        if all(w <= w[p:] + w[:p] for p in range(1, degree)):
            yield w


def cyclic_nu(w: tuple) -> tuple:
    return w[1:] + w[:1]


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v}


# tensors -------------------------------------------------------------------

class TensorElement:
    """Finitely supported map word -> Fraction, truncated at ``max_degree``.

    Values are treated as immutable; every operation returns a new element.
    """

    __slots__ = ("genus", "terms", "max_degree")

    def __init__(self, genus: int, terms: Mapping | None = None, max_degree: int = DEFAULT_MAX_DEGREE):
        if genus < 1:
            raise ValueError("genus must be >= 1")
        self.genus = genus
        self.max_degree = max_degree
        bound = 2 * genus
        clean = {}
        for w, c in (terms or {}).items():
            if not c:
                continue
            w = tuple(w)
            if len(w) > max_degree:
                continue
            for x in w:
                if not 0 <= x < bound:
                    raise ValueError(f"letter {x} out of range for genus {genus}")
            clean[w] = Fraction(c)
        self.terms = clean

    @classmethod
    def word(cls, genus: int, w, coeff=1, max_degree: int = DEFAULT_MAX_DEGREE) -> "TensorElement":
        if isinstance(w, str):
            w = parse_word(w, genus)
        return cls(genus, {tuple(w): coeff}, max_degree)

    @classmethod
    def unit(cls, genus: int, max_degree: int = DEFAULT_MAX_DEGREE) -> "TensorElement":
        return cls(genus, {(): 1}, max_degree)

    @classmethod
    def zero(cls, genus: int, max_degree: int = DEFAULT_MAX_DEGREE) -> "TensorElement":
        return cls(genus, {}, max_degree)

    def _like(self, terms: Mapping, max_degree: int | None = None) -> "TensorElement":
        return TensorElement(self.genus, terms, self.max_degree if max_degree is None else max_degree)

    # queries
    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def degrees(self) -> list:
        return sorted({len(w) for w in self.terms})

    def degree_part(self, m: int) -> "TensorElement":
        return self._like({w: c for w, c in self.terms.items() if len(w) == m})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def augmentation(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorElement):
            return self.genus == other.genus and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    # linear structure
    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        _same_genus(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return self._like(out, min(self.max_degree, other.max_degree))

    def __neg__(self) -> "TensorElement":
        return self._like({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return concat(self, other)
        c = Fraction(other)
        return self._like({w: c * v for w, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def with_max_degree(self, max_degree: int) -> "TensorElement":
        return self._like(self.terms, max_degree)

    # display / serialization
    def __repr__(self) -> str:
        return f"TensorElement(g={self.genus}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self:
            a = abs(c)
            if not w:
                body = str(a)
            elif a == 1:
                body = word_str(w)
            else:
                body = f"{a}*{word_str(w)}"
            parts.append(f"{'-' if c < 0 else '+'} {body}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "max_degree": self.max_degree,
            "terms": [{"coeff": format_fraction(c), "word": [letter_name(x) for x in w]} for w, c in self],
        }

    @classmethod
    def from_json(cls, data) -> "TensorElement":
        if isinstance(data, str):
            data = json.loads(data)
        g = int(data["genus"])
        terms: dict = {}
        for t in data["terms"]:
            w = parse_word(t["word"], g)
            terms[w] = terms.get(w, 0) + parse_fraction(t["coeff"])
        return cls(g, terms, int(data.get("max_degree", DEFAULT_MAX_DEGREE)))


class PairTensorElement:
    """Finitely supported map (word, word) -> Fraction; an element of T (x) T."""

    __slots__ = ("genus", "terms", "max_total_degree")

    def __init__(self, genus: int, terms: Mapping | None = None, max_total_degree: int = 2 * DEFAULT_MAX_DEGREE):
        self.genus = genus
        self.max_total_degree = max_total_degree
        bound = 2 * genus
        clean = {}
        for (u, v), c in (terms or {}).items():
            if not c:
                continue
            u, v = tuple(u), tuple(v)
            if len(u) + len(v) > max_total_degree:
                continue
            for x in u + v:
                if not 0 <= x < bound:
                    raise ValueError(f"letter {x} out of range for genus {genus}")
            clean[(u, v)] = Fraction(c)
        self.terms = clean

    def _like(self, terms: Mapping) -> "PairTensorElement":
        return PairTensorElement(self.genus, terms, self.max_total_degree)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, u, v) -> Fraction:
        return self.terms.get((tuple(u), tuple(v)), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, PairTensorElement):
            return self.genus == other.genus and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def __add__(self, other: "PairTensorElement") -> "PairTensorElement":
        if not isinstance(other, PairTensorElement):
            return NotImplemented
        _same_genus(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PairTensorElement(self.genus, out, min(self.max_total_degree, other.max_total_degree))

    def __neg__(self) -> "PairTensorElement":
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "PairTensorElement") -> "PairTensorElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PairTensorElement):
            return pair_product(self, other)
        c = Fraction(other)
        return self._like({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def switch(self) -> "PairTensorElement":
        """The flip T(u (x) v) = v (x) u."""
        return self._like({(v, u): c for (u, v), c in self.terms.items()})

    def map_left(self, f: Callable[[tuple], Mapping]) -> "PairTensorElement":
        return self._like(_apply_slot(self.terms, f, 0))

    def map_right(self, f: Callable[[tuple], Mapping]) -> "PairTensorElement":
        return self._like(_apply_slot(self.terms, f, 1))

    def part(self, left_degree: int | None = None, right_degree: int | None = None) -> "PairTensorElement":
        return self._like({
            (u, v): c for (u, v), c in self.terms.items()
            if (left_degree is None or len(u) == left_degree) and (right_degree is None or len(v) == right_degree)
        })

    def total_degree_part(self, m: int) -> "PairTensorElement":
        return self._like({(u, v): c for (u, v), c in self.terms.items() if len(u) + len(v) == m})

    @classmethod
    def from_kernel(cls, genus: int, terms: Mapping, scale=1, max_total_degree: int = 2 * DEFAULT_MAX_DEGREE):
        s = Fraction(scale)
        return cls(genus, {k: s * v for k, v in terms.items()}, max_total_degree)

    def __repr__(self) -> str:
        return f"PairTensorElement(g={self.genus}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{'+' if c > 0 else '-'} {abs(c)}*{word_str(u)}(x){word_str(v)}" for (u, v), c in self).lstrip("+ ")

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "max_degree": self.max_total_degree,
            "terms": [
                {"coeff": format_fraction(c), "left": [letter_name(x) for x in u], "right": [letter_name(x) for x in v]}
                for (u, v), c in self
            ],
        }

    @classmethod
    def from_json(cls, data) -> "PairTensorElement":
        if isinstance(data, str):
            data = json.loads(data)
        g = int(data["genus"])
        terms: dict = {}
        for t in data["terms"]:
            k = (parse_word(t["left"], g), parse_word(t["right"], g))
            terms[k] = terms.get(k, 0) + parse_fraction(t["coeff"])
        return cls(g, terms, int(data.get("max_degree", 2 * DEFAULT_MAX_DEGREE)))


def _same_genus(a, b) -> None:
    if a.genus != b.genus:
        raise ValueError(f"genus mismatch: {a.genus} vs {b.genus}")


def _apply_slot(terms: Mapping, f: Callable[[tuple], Mapping], slot: int) -> dict:
    out: dict = {}
    for (u, v), c in terms.items():
        src = (u, v)[slot]
        for w, k in f(src).items():
            key = (w, v) if slot == 0 else (u, w)
            out[key] = out.get(key, 0) + c * k
    return out


def _linear(t: TensorElement, kernel: Callable[[tuple], Mapping], max_degree: int | None = None) -> TensorElement:
    out: dict = {}
    for w, c in t.terms.items():
        for w2, k in kernel(w).items():
            out[w2] = out.get(w2, 0) + c * k
    return t._like(out, max_degree)


def pair_product(p: PairTensorElement, q: PairTensorElement) -> PairTensorElement:
    """Slot-wise concatenation (a (x) b)(c (x) d) = ac (x) bd."""
    _same_genus(p, q)
    out: dict = {}
    for (a, b), c1 in p.terms.items():
        for (c, d), c2 in q.terms.items():
            k = (a + c, b + d)
            out[k] = out.get(k, 0) + c1 * c2
    return PairTensorElement(p.genus, out, min(p.max_total_degree, q.max_total_degree))


# structural operators ------------------------------------------------------

def omega(genus: int, max_degree: int = DEFAULT_MAX_DEGREE) -> TensorElement:
    terms = {}
    for i in range(genus):
        a, b = 2 * i, 2 * i + 1
        terms[(a, b)] = 1
        terms[(b, a)] = -1
    return TensorElement(genus, terms, max_degree)


def concat(u: TensorElement, v: TensorElement) -> TensorElement:
    """Product in the truncated tensor algebra; terms above max_degree are dropped."""
    _same_genus(u, v)
    md = min(u.max_degree, v.max_degree)
    out: dict = {}
    for a, c1 in u.terms.items():
        for b, c2 in v.terms.items():
            if len(a) + len(b) > md:
                continue
            w = a + b
            out[w] = out.get(w, 0) + c1 * c2
    return TensorElement(u.genus, out, md)


def commutator(u: TensorElement, v: TensorElement) -> TensorElement:
    return concat(u, v) - concat(v, u)


def apply_nu(t: TensorElement) -> TensorElement:
    return t._like({cyclic_nu(w): c for w, c in t.terms.items()})


def symmetrize_N(t: TensorElement) -> TensorElement:
    """N = sum of cyclic rotations on each degree; zero on degree 0."""
    return _linear(t, kernels.cyclic_sum)


def antipode(t: TensorElement) -> TensorElement:
    return t._like({w[::-1]: (-c if len(w) % 2 else c) for w, c in t.terms.items()})


def coproduct(t: TensorElement) -> PairTensorElement:
    out: dict = {}
    for w, c in t.terms.items():
        for k, n in kernels.coproduct(w).items():
            out[k] = out.get(k, 0) + c * n
    return PairTensorElement(t.genus, out, t.max_degree)


def reduced_coproduct(t: TensorElement) -> PairTensorElement:
    out: dict = {}
    for w, c in t.terms.items():
        for (a, b), n in kernels.coproduct(w).items():
            if a and b:
                out[(a, b)] = out.get((a, b), 0) + c * n
    return PairTensorElement(t.genus, out, t.max_degree)


def is_primitive(t: TensorElement) -> bool:
    if t.augmentation():
        return False
    return reduced_coproduct(t).is_zero()


def antipode_right(p: PairTensorElement) -> PairTensorElement:
    """(1 (x) iota) on a pair tensor."""
    return p._like({(u, v[::-1]): (-c if len(v) % 2 else c) for (u, v), c in p.terms.items()})


def dynkin_phi(t: TensorElement) -> TensorElement:
    if t.augmentation():
        raise ValueError("Dynkin map is undefined in degree 0")
    return _linear(t, kernels.dynkin)


def sym_project(t: TensorElement) -> TensorElement:
    """Commutative normal form: letters of each word sorted."""
    out: dict = {}
    for w, c in t.terms.items():
        k = tuple(sorted(w))
        out[k] = out.get(k, 0) + c
    return t._like(out)


def c12_contract(t: TensorElement) -> TensorElement:
    out: dict = {}
    for w, c in t.terms.items():
        if len(w) < 2:
            raise ValueError("contraction needs degree >= 2")
        k, rest = kernels.contract_first(w)
        if k:
            out[rest] = out.get(rest, 0) + c * k
    return t._like(out)


def bullet_leadsto(u: TensorElement, v: TensorElement) -> TensorElement:
    """Contract the last letter of u-words with the first letter of v-words."""
    _same_genus(u, v)
    out: dict = {}
    for a, c1 in u.terms.items():
        if not a:
            raise ValueError("left argument has a degree-0 term")
        for b, c2 in v.terms.items():
            if not b:
                raise ValueError("right argument has a degree-0 term")
            k, w = kernels.bullet(a, b)
            if k:
                out[w] = out.get(w, 0) + c1 * c2 * k
    return TensorElement(u.genus, out, min(u.max_degree, v.max_degree))


def s_of_omega(genus: int, max_degree: int) -> TensorElement:
    """s(omega) truncated at tensor degree max_degree."""
    order = max_degree // 2
    coeffs = s_series(order).coeffs
    om = omega(genus, max_degree)
    power = TensorElement.unit(genus, max_degree)
    acc = TensorElement.zero(genus, max_degree)
    for n, c in enumerate(coeffs):
        if n:
            power = concat(power, om)
        if c:
            acc = acc + c * power
    return acc


def lie_elements(genus: int, degree: int) -> Iterator[TensorElement]:
    """Right-normed brackets of basis letters; they span the free Lie algebra in this degree."""
    for w in words(genus, degree):
        yield dynkin_phi(TensorElement.word(genus, w))


def wedge3(genus: int, x: int, y: int, z: int, max_degree: int = DEFAULT_MAX_DEGREE) -> TensorElement:
    """X^Y^Z embedded as the full antisymmetrization XYZ - XZY - YXZ + YZX + ZXY - ZYX."""
    terms: dict = {}
    for (a, b, c), s in (((x, y, z), 1), ((x, z, y), -1), ((y, x, z), -1),
                         ((y, z, x), 1), ((z, x, y), 1), ((z, y, x), -1)):
        terms[(a, b, c)] = terms.get((a, b, c), 0) + s
    return TensorElement(genus, terms, max_degree)


def from_terms(genus: int, pairs: Iterable, max_degree: int = DEFAULT_MAX_DEGREE) -> TensorElement:
    terms: dict = {}
    for w, c in pairs:
        w = parse_word(w, genus) if isinstance(w, str) else tuple(w)
        terms[w] = terms.get(w, 0) + Fraction(c)
    return TensorElement(genus, terms, max_degree)
