"""Gauss codes of immersed loops and the power-series obstruction to realizing
their generalized Dehn twists.

A code lists the 2k passages of the loop through its double points in order.
Arc ``i`` runs from passage ``i - 1`` to passage ``i`` (arc 0 wraps around from
the last passage), so the arcs are the edges of the underlying 4-valent graph.
The basepoint sits on ``marked_arc`` and the stored signs are read with that
basepoint, i.e. ``signs[p]`` is the sign at p for the order in which the loop,
started on the marked arc, meets p.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Mapping

from .exact import TruncatedSeries, format_fraction, h_series, obstruction_series
from .linalg import det, integer_inverse

OBSTRUCTED = "OBSTRUCTED"
NO_OBSTRUCTION_FOUND = "NO_OBSTRUCTION_FOUND"
DEFAULT_ORDER = 8

HYPOTHESIS = (
    "assumes the inclusion of fundamental groups from a regular neighbourhood "
    "of the loop into the surface is injective; this is not checked"
)


class GaussCodeError(ValueError):
    """Malformed Gauss code."""


@dataclass(frozen=True)
class GaussCode:
    crossings: int
    sequence: tuple  # of (crossing_id, visit)
    signs: Mapping = field(default_factory=dict)
    marked_arc: int = 0

    def __post_init__(self):
        seq = tuple((str(c), int(v)) for c, v in self.sequence)
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "signs", {str(k): int(v) for k, v in dict(self.signs).items()})
        self.validate()

    @property
    def ids(self) -> list:
        seen = []
        for c, _ in self.sequence:
            if c not in seen:
                seen.append(c)
        return seen

    @property
    def n_arcs(self) -> int:
        return max(len(self.sequence), 1)

    def validate(self) -> None:
        k = self.crossings
        if k < 0:
            raise GaussCodeError("crossings must be >= 0")
        if len(self.sequence) != 2 * k:
            raise GaussCodeError(f"sequence has {len(self.sequence)} passages, expected {2 * k}")
        first: dict = {}
        for pos, (c, v) in enumerate(self.sequence):
            if v not in (1, 2):
                raise GaussCodeError(f"visit must be 1 or 2, got {v}")
            if v == 1:
                if c in first:
                    raise GaussCodeError(f"crossing {c} has a duplicate first visit")
                first[c] = pos
            else:
                if c not in first:
                    raise GaussCodeError(f"crossing {c}: second visit before the first")
                if first[c] is None:
                    raise GaussCodeError(f"crossing {c} has a duplicate second visit")
                first[c] = None
        if any(p is not None for p in first.values()):
            raise GaussCodeError("some crossing is visited only once")
        if len(first) != k:
            raise GaussCodeError(f"expected {k} distinct crossings, found {len(first)}")
        missing = [c for c in first if c not in self.signs]
        if missing:
            raise GaussCodeError(f"missing sign for crossing(s) {', '.join(missing)}")
        extra = [c for c in self.signs if c not in first]
        if extra:
            raise GaussCodeError(f"sign given for unknown crossing(s) {', '.join(extra)}")
        if any(s not in (1, -1) for s in self.signs.values()):
            raise GaussCodeError("signs must be +1 or -1")
        if not 0 <= self.marked_arc < self.n_arcs:
            raise GaussCodeError(f"marked_arc {self.marked_arc} out of range 0..{self.n_arcs - 1}")

    def to_json(self) -> dict:
        return {
            "crossings": self.crossings,
            "sequence": [{"crossing": c, "visit": v} for c, v in self.sequence],
            "signs": dict(sorted(self.signs.items())),
            "marked_arc": self.marked_arc,
        }

    @classmethod
    def from_json(cls, data) -> "GaussCode":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise GaussCodeError(f"invalid JSON: {exc}") from None
        try:
            seq = [(item["crossing"], item["visit"]) for item in data["sequence"]]
            return cls(int(data["crossings"]), tuple(seq), data.get("signs", {}), int(data.get("marked_arc", 0)))
        except (KeyError, TypeError) as exc:
            raise GaussCodeError(f"malformed Gauss code: {exc!r}") from None


def circle() -> GaussCode:
    return GaussCode(0, (), {}, 0)


def figure_eight(sign: int = 1, marked_arc: int = 0) -> GaussCode:
    return GaussCode(1, (("1", 1), ("1", 2)), {"1": sign}, marked_arc)


def spine_code(g: int, sign: int = 1) -> GaussCode:
    """A chain of g - 1 kinks: a spine of the sphere with g + 1 holes."""
    if g < 1:
        raise ValueError("g must be >= 1")
    seq = []
    for i in range(1, g):
        seq += [(str(i), 1), (str(i), 2)]
    return GaussCode(g - 1, tuple(seq), {str(i): sign for i in range(1, g)}, 0)


def random_code(k: int, rng: random.Random) -> GaussCode:
    """Random double-occurrence word with k letters, random signs and basepoint."""
    letters_ = [str(i) for i in range(1, k + 1)] * 2
    rng.shuffle(letters_)
    seen: set = set()
    seq = []
    for c in letters_:
        seq.append((c, 2 if c in seen else 1))
        seen.add(c)
    signs = {str(i): rng.choice((1, -1)) for i in range(1, k + 1)}
    return GaussCode(k, tuple(seq), signs, rng.randrange(max(2 * k, 1)))


def random_corpus(n: int, max_crossings: int = 5, seed: int = 0) -> list:
    rng = random.Random(seed)
    return [random_code(rng.randint(0, max_crossings), rng) for _ in range(n)]


# ---------------------------------------------------------------------------
# graph and homology


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # edge i = (tail vertex, head vertex) of arc i
    tree: frozenset
    cycle_edges: tuple  # non-tree edges; their coefficients are the cycle coordinates

    @property
    def betti(self) -> int:
        return len(self.cycle_edges)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "cycle_basis_edges": list(self.cycle_edges),
            "b1": self.betti,
        }


def build_graph(code: GaussCode) -> Graph:
    if code.crossings == 0:
        return Graph(("*",), (("*", "*"),), frozenset(), (0,))
    seq = code.sequence
    n = len(seq)
    edges = tuple((seq[i - 1][0], seq[i][0]) for i in range(n))
    vertices = tuple(code.ids)
    # breadth-first spanning tree, scanning edges in index order
    reached = {vertices[0]}
    tree = set()
    frontier = [vertices[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for i, (a, b) in enumerate(edges):
                if v in (a, b):
                    other = b if a == v else a
                    if other not in reached:
                        reached.add(other)
                        tree.add(i)
                        nxt.append(other)
        frontier = nxt
    cycle_edges = tuple(i for i in range(n) if i not in tree)
    return Graph(vertices, edges, frozenset(tree), cycle_edges)


@dataclass(frozen=True)
class AbelianClass:
    exponents: tuple

    def __add__(self, other: "AbelianClass") -> "AbelianClass":
        return AbelianClass(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __sub__(self, other: "AbelianClass") -> "AbelianClass":
        return AbelianClass(tuple(a - b for a, b in zip(self.exponents, other.exponents)))


def _coords(graph: Graph, edge_vector) -> AbelianClass:
    return AbelianClass(tuple(edge_vector[e] for e in graph.cycle_edges))


def _time_positions(code: GaussCode) -> dict:
    """crossing -> (t1, t2): passage indices in the order met from the marked arc."""
    n = len(code.sequence)
    a = code.marked_arc
    out: dict = {}
    for r in range(n):
        c = code.sequence[(a + r) % n][0]
        out.setdefault(c, []).append(r)
    return {c: tuple(v) for c, v in out.items()}


@dataclass(frozen=True)
class HomologyData:
    graph: Graph
    crossings: tuple
    x: tuple
    y: tuple
    c: AbelianClass

    def to_json(self) -> dict:
        return {
            "crossings": list(self.crossings),
            "x": [list(v.exponents) for v in self.x],
            "y": [list(v.exponents) for v in self.y],
            "c": list(self.c.exponents),
        }


def homology_classes(code: GaussCode) -> HomologyData:
    """Classes x_p, y_p and c in the cycle coordinates of ``build_graph``.

    y_p is the loop running from the first to the second passage through p,
    x_p the complementary loop, so x_p + y_p = c.
    """
    graph = build_graph(code)
    n = len(code.sequence)
    if n == 0:
        return HomologyData(graph, (), (), (), AbelianClass((1,)))
    c_vec = [1] * n
    a = code.marked_arc
    ids, xs, ys = [], [], []
    for cid, (r1, r2) in _time_positions(code).items():
        y_vec = [0] * n
        for r in range(r1 + 1, r2 + 1):
            y_vec[(a + r) % n] = 1
        x_vec = [ci - yi for ci, yi in zip(c_vec, y_vec)]
        ids.append(cid)
        xs.append(_coords(graph, x_vec))
        ys.append(_coords(graph, y_vec))
    return HomologyData(graph, tuple(ids), tuple(xs), tuple(ys), _coords(graph, c_vec))


def basis_matrix(h: HomologyData) -> list:
    return [list(v.exponents) for v in h.x] + [list(h.c.exponents)]


def basis_check(code: GaussCode) -> tuple:
    """(|det| == 1, det) for the matrix with rows x_p and then c."""
    d = det(basis_matrix(homology_classes(code)))
    return abs(d) == 1, d


# ---------------------------------------------------------------------------
# signs and basepoints


def epsilon_sum(code: GaussCode) -> int:
    return sum(code.signs.values())


def shift_basepoint(code: GaussCode, new_arc: int) -> GaussCode:
    """Move the basepoint to ``new_arc``.

    Crossing the passage through q swaps which visit of q is met first, so the
    sign of q flips; a crossing whose two passages are both crossed keeps its sign.
    """
    n = code.n_arcs
    if not 0 <= new_arc < n:
        raise GaussCodeError(f"arc {new_arc} out of range 0..{n - 1}")
    lo, hi = sorted((code.marked_arc, new_arc))
    passed: dict = {}
    for c, _ in code.sequence[lo:hi]:
        passed[c] = passed.get(c, 0) + 1
    signs = {c: (-s if passed.get(c, 0) == 1 else s) for c, s in code.signs.items()}
    return GaussCode(code.crossings, code.sequence, signs, new_arc)


def epsilon_sums(code: GaussCode) -> list:
    """Sum of signs for the basepoint on each arc 0, 1, ..."""
    return [epsilon_sum(shift_basepoint(code, a)) for a in range(code.n_arcs)]


# ---------------------------------------------------------------------------
# truncated group-ring series


class GroupRingSeries:
    """Element of the completed rational group ring of Z^n, written in s_i = g_i - 1
    and truncated above total degree ``order``."""

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: Mapping | None = None):
        self.nvars = nvars
        self.order = order
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError("monomial has the wrong number of variables")
            if sum(mono) <= order and c:
                clean[mono] = Fraction(c)
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, order: int, value=1) -> "GroupRingSeries":
        return cls(nvars, order, {(0,) * nvars: value})

    @classmethod
    def group_element(cls, exponents, order: int) -> "GroupRingSeries":
        """prod_i (1 + s_i)^e_i, negative exponents by the binomial series."""
        n = len(exponents)
        active = [i for i, e in enumerate(exponents) if e]
        terms = {}
        for mono, coeff in _monomials(active, n, order):
            for i in active:
                coeff *= _binom(exponents[i], mono[i])
            terms[mono] = coeff
        return cls(n, order, terms)

    def _check(self, other: "GroupRingSeries") -> None:
        if self.nvars != other.nvars:
            raise ValueError("series over different groups")

    def __add__(self, other):
        if not isinstance(other, GroupRingSeries):
            other = GroupRingSeries.constant(self.nvars, self.order, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GroupRingSeries(self.nvars, min(self.order, other.order), out)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingSeries(self.nvars, self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GroupRingSeries):
            return GroupRingSeries(self.nvars, self.order, {m: c * Fraction(other) for m, c in self.terms.items()})
        self._check(other)
        order = min(self.order, other.order)
        # scale both sides to integer coefficients and bucket by total degree
        a, da = _integral(self.terms)
        b, db = _integral(other.terms)
        buckets: dict = {}
        for m, c in b.items():
            buckets.setdefault(sum(m), []).append((m, c))
        out: dict = {}
        for m1, c1 in a.items():
            room = order - sum(m1)
            for d in range(room + 1):
                for m2, c2 in buckets.get(d, ()):
                    m = tuple(x + y for x, y in zip(m1, m2))
                    out[m] = out.get(m, 0) + c1 * c2
        den = da * db
        return GroupRingSeries(self.nvars, order, {m: Fraction(c, den) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingSeries):
            return NotImplemented
        return (self.nvars, self.order, self.terms) == (other.nvars, other.order, other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def compose(self, f: TruncatedSeries) -> "GroupRingSeries":
        """f(self) for a univariate series f; self must have zero constant term."""
        if self.terms.get((0,) * self.nvars):
            raise ValueError("inner series must have zero constant term")
        out = GroupRingSeries.constant(self.nvars, self.order, 0)
        for n in range(min(f.order, self.order), -1, -1):
            out = out * self + f[n]
        return out

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "order": self.order,
            "terms": [[list(m), format_fraction(c)] for m, c in sorted(self.terms.items())],
        }

    def __repr__(self) -> str:
        return f"GroupRingSeries(nvars={self.nvars}, order={self.order}, terms={len(self.terms)})"


def _integral(terms: Mapping) -> tuple:
    den = lcm(*(c.denominator for c in terms.values())) if terms else 1
    return {m: c.numerator * (den // c.denominator) for m, c in terms.items()}, den


def _monomials(active, n: int, order: int):
    """Exponent vectors supported on ``active`` with total degree <= order."""
    mono = [0] * n

    def rec(idx: int, budget: int):
        if idx == len(active):
            yield tuple(mono), 1
            return
        i = active[idx]
        for j in range(budget + 1):
            mono[i] = j
            yield from rec(idx + 1, budget - j)
        mono[i] = 0

    yield from rec(0, order)


def _binom(e: int, j: int) -> int:
    if e >= 0:
        return comb(e, j)
    # C(-m, j) = (-1)^j C(m + j - 1, j)
    return (-1) ** j * comb(-e + j - 1, j)


def pimu_element(code: GaussCode, order: int = DEFAULT_ORDER) -> GroupRingSeries:
    """-sum_p eps_p (y_p + x_p (y_p^2 - 1) h(c)) in the truncated group ring.

    Every factor except h(c) is a signed sum of group elements, and h(c) is
    expanded through (c - 1)^n = sum_j C(n, j) (-1)^(n-j) c^j, so a single
    multivariate product is needed.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    h = homology_classes(code)
    n = len(h.c.exponents)
    if not h.crossings:
        return GroupRingSeries.constant(n, order, 0)
    linear: dict = {}
    outer: dict = {}
    for cid, x, y in zip(h.crossings, h.x, h.y):
        eps = code.signs[cid]
        _bump(linear, y.exponents, -eps)
        _bump(outer, (x + y + y).exponents, -eps)
        _bump(outer, x.exponents, eps)
    hs = h_series(order)
    hc_terms: dict = {}
    for k in range(order + 1):
        for j in range(k + 1):
            coeff = hs[k] * comb(k, j) * (-1) ** (k - j)
            _bump(hc_terms, tuple(j * e for e in h.c.exponents), coeff)
    return _group_sum(linear, n, order) + _group_sum(outer, n, order) * _group_sum(hc_terms, n, order)


def pimu_element_reference(code: GaussCode, order: int) -> GroupRingSeries:
    """Same element by straightforward products and a Horner evaluation of h; slow."""
    if order < 1:
        raise ValueError("order must be >= 1")
    h = homology_classes(code)
    n = len(h.c.exponents)
    total = GroupRingSeries.constant(n, order, 0)
    if not h.crossings:
        return total
    c = _reference_element(h.c.exponents, order)
    hc = (c - 1).compose(h_series(order))
    for cid, x, y in zip(h.crossings, h.x, h.y):
        gy = _reference_element(y.exponents, order)
        gx = _reference_element(x.exponents, order)
        total = total - (gy + gx * (gy * gy - 1) * hc) * code.signs[cid]
    return total


def _reference_element(exponents, order: int) -> GroupRingSeries:
    # (1 + s_i)^e as repeated products, with (1 + s_i)^-1 = sum (-s_i)^j
    n = len(exponents)
    out = GroupRingSeries.constant(n, order)
    for i, e in enumerate(exponents):
        unit = [0] * n
        unit[i] = 1
        gen = GroupRingSeries(n, order, {(0,) * n: 1, tuple(unit): 1})
        if e < 0:
            gen = GroupRingSeries(n, order, {tuple(j * u for u in unit): (-1) ** j for j in range(order + 1)})
        for _ in range(abs(e)):
            out = out * gen
    return out


def _bump(d: dict, key, value) -> None:
    key = tuple(key)
    d[key] = d.get(key, 0) + value


def _group_sum(coeffs: dict, n: int, order: int) -> GroupRingSeries:
    out: dict = {}
    for exps, c in coeffs.items():
        if not c:
            continue
        for mono, v in GroupRingSeries.group_element(exps, order).terms.items():
            out[mono] = out.get(mono, 0) + c * v
    return GroupRingSeries(n, order, out)


def phi_exponents(code: GaussCode) -> list:
    """b_i with Phi(g_i) = t^b_i, where Phi sends every x_p to 1 and c to t."""
    ok, d = basis_check(code)
    if not ok:
        raise ValueError(f"x_p and c do not form an integral basis (det {d})")
    inv = integer_inverse(basis_matrix(homology_classes(code)))
    return [row[-1] for row in inv]


def specialize_phi(series: GroupRingSeries, code: GaussCode) -> TruncatedSeries:
    """Image under Phi followed by t -> 1 + s."""
    b = phi_exponents(code)
    if len(b) != series.nvars:
        raise ValueError("series does not live on this code's cycle basis")
    order = series.order
    # power tables of (1 + s)^b - 1, as coefficient lists truncated at ``order``
    tables = []
    for e in b:
        g = [Fraction(_binom(e, j)) for j in range(order + 1)]
        g[0] -= 1
        powers = [[Fraction(1)] + [Fraction(0)] * order]
        for _ in range(order):
            powers.append(_poly_mul(powers[-1], g, order))
        tables.append(powers)
    out = [Fraction(0)] * (order + 1)
    for mono, coeff in series.terms.items():
        term = [coeff] + [Fraction(0)] * order
        for i, j in enumerate(mono):
            if j:
                term = _poly_mul(term, tables[i][j], order)
        out = [a + t for a, t in zip(out, term)]
    return TruncatedSeries("s", order, out)


def _poly_mul(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def obstruction_verdict(code: GaussCode, order: int = DEFAULT_ORDER) -> dict:
    if order < 2:
        raise ValueError("order must be >= 2")
    ok, d = basis_check(code)
    sums = epsilon_sums(code) if code.crossings else [0]
    report = {
        "crossings": code.crossings,
        "marked_arc": code.marked_arc,
        "epsilon_sums": sums,
        "basis_det": d,
        "basis_ok": ok,
        "order": order,
        "assumption": HYPOTHESIS,
    }
    if code.crossings == 0:
        report.update(verdict=NO_OBSTRUCTION_FOUND, reason="simple loop", arc=None, epsilon_sum=0, series=None)
        return report
    arc = code.marked_arc if sums[code.marked_arc] else next((a for a, e in enumerate(sums) if e), None)
    if arc is None:
        report.update(verdict=NO_OBSTRUCTION_FOUND, reason="every basepoint has zero sign sum",
                      arc=None, epsilon_sum=0, series=None)
        return report
    shifted = shift_basepoint(code, arc)
    series = specialize_phi(pimu_element(shifted, order), shifted)
    nonconstant = any(series[n] for n in range(1, order + 1))
    report.update(
        verdict=OBSTRUCTED if nonconstant else NO_OBSTRUCTION_FOUND,
        reason="specialized series is nonzero modulo constants" if nonconstant else "series is constant",
        arc=arc,
        epsilon_sum=sums[arc],
        series=[format_fraction(c) for c in series.coeffs],
    )
    return report


def expected_series(code: GaussCode, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """-(sum of signs) times t + (t^2 - 1) h(t) at t = 1 + s."""
    return obstruction_series(order) * (-epsilon_sum(code))


def corpus_report(codes: Iterable[GaussCode], order: int = 4) -> dict:
    """Sweep the structural identities over a list of codes."""
    checked = 0
    failures = []
    for idx, code in enumerate(codes):
        checked += 1
        problems = []
        h = homology_classes(code)
        if any(x + y != h.c for x, y in zip(h.x, h.y)):
            problems.append("x_p + y_p != c")
        ok, d = basis_check(code)
        if not ok:
            problems.append(f"det {d}")
        if code.crossings:
            sums = epsilon_sums(code)
            n = len(sums)
            if any(abs(sums[i] - sums[(i + 1) % n]) != 2 for i in range(n)):
                problems.append("adjacent sign sums do not differ by 2")
            if not any(sums):
                problems.append("all sign sums vanish")
            if ok and specialize_phi(pimu_element(code, order), code) != expected_series(code, order):
                problems.append("specialized series mismatch")
        if problems:
            failures.append({"index": idx, "code": code.to_json(), "problems": problems})
    return {"checked": checked, "failure_count": len(failures), "failures": failures[:5]}
