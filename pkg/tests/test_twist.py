from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from gtalg.exact import TruncatedSeries, h_series, obstruction_series
from gtalg.twist import (
    NO_OBSTRUCTION_FOUND,
    OBSTRUCTED,
    GaussCode,
    GaussCodeError,
    GroupRingSeries,
    basis_check,
    build_graph,
    circle,
    corpus_report,
    epsilon_sum,
    epsilon_sums,
    expected_series,
    figure_eight,
    homology_classes,
    obstruction_verdict,
    pimu_element,
    pimu_element_reference,
    random_code,
    random_corpus,
    shift_basepoint,
    specialize_phi,
    spine_code,
)

codes = st.builds(lambda k, seed: random_code(k, random.Random(seed)), st.integers(0, 5), st.integers(0, 10**6))


def test_graph_examples():
    assert build_graph(circle()).betti == 1
    g = build_graph(figure_eight())
    assert len(g.vertices) == 1 and len(g.edges) == 2 and g.betti == 2
    code = random_code(3, random.Random(4))
    assert build_graph(code).betti == 4


def test_homology_examples():
    h = homology_classes(figure_eight())
    assert {h.x[0].exponents, h.y[0].exponents} == {(1, 0), (0, 1)}
    assert h.x[0] + h.y[0] == h.c
    h0 = homology_classes(circle())
    assert h0.x == () and h0.c.exponents == (1,)


def test_basis_examples():
    assert basis_check(figure_eight())[0]
    assert basis_check(circle()) == (True, 1)


@settings(max_examples=150)
@given(codes)
def test_structural_claims(code):
    h = homology_classes(code)
    assert all(x + y == h.c for x, y in zip(h.x, h.y))
    ok, d = basis_check(code)
    assert ok and abs(d) == 1
    if code.crossings:
        sums = epsilon_sums(code)
        assert all(abs(sums[i] - sums[(i + 1) % len(sums)]) == 2 for i in range(len(sums)))
        assert any(sums)


def test_epsilon_examples():
    for arc in (0, 1):
        assert abs(epsilon_sum(shift_basepoint(figure_eight(), arc))) == 1


def test_shift_flips_only_the_crossed_sign():
    code = GaussCode(2, (("1", 1), ("2", 1), ("1", 2), ("2", 2)), {"1": 1, "2": 1}, 0)
    moved = shift_basepoint(code, 1)
    assert moved.signs == {"1": -1, "2": 1}
    assert shift_basepoint(moved, 0) == code
    with pytest.raises(GaussCodeError):
        shift_basepoint(code, 4)


def test_validation():
    with pytest.raises(GaussCodeError):
        GaussCode(1, (("1", 1), ("1", 2)), {}, 0)
    with pytest.raises(GaussCodeError):
        GaussCode(1, (("1", 1), ("1", 1)), {"1": 1}, 0)
    with pytest.raises(GaussCodeError):
        GaussCode(1, (("1", 2), ("1", 1)), {"1": 1}, 0)
    with pytest.raises(GaussCodeError):
        GaussCode(1, (("1", 1), ("1", 2)), {"1": 1}, 2)
    with pytest.raises(GaussCodeError):
        GaussCode.from_json('{"crossings": 1}')


def test_json_roundtrip():
    code = random_code(4, random.Random(9))
    assert GaussCode.from_json(code.to_json()) == code


def test_group_element_inverse():
    g = GroupRingSeries.group_element((2, -1), 5)
    ginv = GroupRingSeries.group_element((-2, 1), 5)
    assert g * ginv == GroupRingSeries.constant(2, 5)


def test_pimu_circle_is_zero():
    assert pimu_element(circle(), 4).is_zero()
    assert specialize_phi(pimu_element(circle(), 4), circle()) == TruncatedSeries("s", 4, [])


def test_pimu_figure_eight_low_order():
    # x = s_1 + 1 (arc 0), y = s_2 + 1 (arc 1), c = xy; order 2 by hand
    got = pimu_element(figure_eight(), 2)
    h = h_series(2)
    s1 = GroupRingSeries(2, 2, {(1, 0): 1})
    s2 = GroupRingSeries(2, 2, {(0, 1): 1})
    x, y = s1 + 1, s2 + 1
    cm1 = x * y - 1
    hc = cm1 * cm1 * h[2] + cm1 * h[1] + h[0]
    assert got == -(y + x * (y * y - 1) * hc)


@settings(max_examples=30, deadline=None)
@given(st.builds(lambda k, seed: random_code(k, random.Random(seed)), st.integers(0, 3), st.integers(0, 10**6)))
def test_fast_and_reference_pimu_agree(code):
    assert pimu_element(code, 3) == pimu_element_reference(code, 3)


def test_specialization_collapses_to_obstruction_series():
    for code in random_corpus(40, 4, seed=3):
        assert specialize_phi(pimu_element(code, 6), code) == expected_series(code, 6)


def test_specialize_is_linear():
    a, b = figure_eight(), figure_eight(sign=-1)
    pa, pb = pimu_element(a, 4), pimu_element(b, 4)
    assert specialize_phi(pa + pb, a) == specialize_phi(pa, a) + specialize_phi(pb, a)


def test_figure_eight_series_and_verdict():
    s = specialize_phi(pimu_element(figure_eight(), 8), figure_eight())
    assert s == obstruction_series(8) * -1
    assert list(s.coeffs[:3]) == [-1, -2, F(1, 6)]
    r = obstruction_verdict(figure_eight(-1))
    assert r["verdict"] == OBSTRUCTED
    assert r["series"][:3] == ["1/1", "2/1", "-1/6"]


def test_verdicts():
    assert obstruction_verdict(circle())["verdict"] == NO_OBSTRUCTION_FOUND
    assert obstruction_verdict(spine_code(2))["verdict"] == OBSTRUCTED
    r = obstruction_verdict(spine_code(3))
    assert r["verdict"] == OBSTRUCTED and "not checked" in r["assumption"]
    with pytest.raises(ValueError):
        obstruction_verdict(figure_eight(), 1)


def test_verdict_moves_basepoint_when_sum_vanishes():
    code = GaussCode(2, (("1", 1), ("1", 2), ("2", 1), ("2", 2)), {"1": 1, "2": -1}, 0)
    assert epsilon_sum(code) == 0
    r = obstruction_verdict(code, 4)
    assert r["verdict"] == OBSTRUCTED and r["arc"] != 0 and r["epsilon_sum"] != 0


def test_corpus_report_clean():
    r = corpus_report(random_corpus(60, 5, seed=1), order=4)
    assert r["checked"] == 60 and r["failure_count"] == 0
