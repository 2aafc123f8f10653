from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from gtalg.tensor import (
    PairTensorElement,
    ParseError,
    TensorElement,
    antipode,
    antipode_right,
    bullet_leadsto,
    c12_contract,
    coproduct,
    cyclic_nu,
    dynkin_phi,
    from_terms,
    is_primitive,
    omega,
    pairing,
    parse_word,
    sym_project,
    symmetrize_N,
    word_str,
    words,
)

A1, B1, A2, B2 = 0, 1, 2, 3


def W(text, g=2, c=1):
    return TensorElement.word(g, text, c)


def test_pairing_signs():
    assert pairing(A1, B1) == 1
    assert pairing(B1, A1) == -1
    assert pairing(A1, A2) == 0
    assert pairing(A1, A1) == 0


def test_parse_and_print():
    assert parse_word("a1b1a2") == (A1, B1, A2)
    assert parse_word(["a1", "B2"]) == (A1, B2)
    assert parse_word("1") == ()
    assert word_str((A1, B2)) == "a1b2"
    assert word_str(()) == "1"
    with pytest.raises(ParseError):
        parse_word("a3b1", genus=1)
    with pytest.raises(ParseError):
        parse_word("a1x2")


def test_omega():
    assert omega(1) == from_terms(1, [("a1b1", 1), ("b1a1", -1)])
    assert omega(2) == from_terms(2, [("a1b1", 1), ("b1a1", -1), ("a2b2", 1), ("b2a2", -1)])
    assert cyclic_nu((A1, B1)) == (B1, A1)


def test_symmetrize_N():
    assert symmetrize_N(W("a1")) == W("a1")
    assert symmetrize_N(TensorElement.unit(2)).is_zero()
    assert symmetrize_N(W("a1b1")) == W("a1b1") + W("b1a1")


def test_antipode():
    assert antipode(W("a1b1")) == W("b1a1")
    assert antipode(W("a1")) == -W("a1")
    t = W("a1b1a2", c=3) + W("b2")
    assert antipode(antipode(t)) == t


def test_coproduct_and_dxx():
    assert coproduct(W("a1")) == PairTensorElement(2, {((A1,), ()): 1, ((), (A1,)): 1})
    got = antipode_right(coproduct(W("a1a2")))
    want = PairTensorElement(2, {((A1, A2), ()): 1, ((A1,), (A2,)): -1, ((A2,), (A1,)): -1, ((), (A2, A1)): 1})
    assert got == want
    assert is_primitive(omega(1))
    assert not is_primitive(W("a1b1"))


def test_dynkin():
    u = W("a1b1") - W("b1a1")
    assert dynkin_phi(W("a1b1")) == u
    assert dynkin_phi(u) == 2 * u
    assert dynkin_phi(W("a1a1a1")).is_zero()
    with pytest.raises(ValueError):
        dynkin_phi(TensorElement.unit(1))


def test_sym_project():
    assert sym_project(W("b1a1")) == W("a1b1")
    assert sym_project(W("a1b1") - W("b1a1")).is_zero()


@pytest.mark.parametrize("m", [2, 3, 4])
def test_sym_of_lie_vanishes(m):
    for w in words(2, m):
        assert sym_project(dynkin_phi(TensorElement.word(2, w))).is_zero()


def test_c12():
    assert c12_contract(W("a1b1a1")) == W("a1")
    assert c12_contract(W("a1a1b1")).is_zero()
    assert c12_contract(omega(2)) == TensorElement.unit(2) * 4
    with pytest.raises(ValueError):
        c12_contract(W("a1"))


def test_bullet():
    assert bullet_leadsto(W("a1"), W("b1")) == TensorElement.unit(2)
    assert bullet_leadsto(W("a1b1"), W("a1a2")) == -W("a1a2")
    assert bullet_leadsto(W("a1"), W("a1")).is_zero()


def test_truncation_drops_high_degree():
    t = TensorElement.word(1, "a1b1", 1, max_degree=3)
    assert (t * t).is_zero()


def test_json_roundtrip():
    t = from_terms(2, [("a1b1", F(1, 3)), ("", -2), ("b2", 5)])
    assert TensorElement.from_json(t.to_json()) == t
    p = coproduct(W("a1b1a2"))
    assert PairTensorElement.from_json(p.to_json()) == p


words_g2 = st.lists(st.integers(0, 3), min_size=1, max_size=5).map(tuple)


@given(words_g2, words_g2)
def test_coproduct_is_multiplicative(u, v):
    a, b = TensorElement.word(2, u), TensorElement.word(2, v)
    assert coproduct(a * b) == coproduct(a) * coproduct(b)


@given(words_g2)
def test_lie_elements_are_primitive(w):
    assert is_primitive(dynkin_phi(TensorElement.word(2, w)))


@given(words_g2)
def test_antipode_on_lie_is_minus_one(w):
    phi = dynkin_phi(TensorElement.word(2, w))
    assert antipode(phi) == -phi
