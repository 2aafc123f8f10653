from __future__ import annotations

import random

import pytest

from gtalg.derivations import (
    DerivationElement,
    NotCyclicInvariant,
    annihilates_omega,
    bracket,
    derive_letter,
    derive_tensor,
    is_in_lplus,
    lplus_brute_force_rank,
    lplus_generator,
    lplus_generator_rank,
    random_n_image,
    raw_bracket,
)
from gtalg.tensor import TensorElement, omega

A1, B1, A2, B2 = 0, 1, 2, 3


def N(text, g=1):
    return DerivationElement.from_word(g, TensorElement.word(g, text).terms.popitem()[0])


def test_derive_letter_examples():
    assert derive_letter(N("a1a1"), B1) == TensorElement.word(1, "a1", -2)
    assert derive_letter(N("a1b1"), A1) == TensorElement.word(1, "a1")


def test_derive_tensor_examples():
    d = N("a1a1")
    assert derive_tensor(d, TensorElement.unit(1)).is_zero()
    assert derive_tensor(d, omega(1)).is_zero()
    d = N("a1b1a1")
    t = TensorElement.word(1, "a1b1")
    leibniz = derive_letter(d, A1) * TensorElement.word(1, "b1") + TensorElement.word(1, "a1") * derive_letter(d, B1)
    assert derive_tensor(d, t) == leibniz


def test_annihilates_omega():
    assert annihilates_omega(N("a1a1"))
    assert annihilates_omega(N("a1b1"))
    assert not annihilates_omega(TensorElement.word(1, "a1a1b1"))


def test_rejects_non_invariant():
    with pytest.raises(NotCyclicInvariant):
        DerivationElement.from_tensor(TensorElement.word(1, "a1a1b1"))
    with pytest.raises(ValueError):
        DerivationElement.from_tensor(TensorElement.unit(1))


def test_bracket_example():
    assert bracket(N("a1a1"), N("b1b1")) == N("a1b1") * -4
    d = N("a1b1a1")
    assert bracket(d, d).is_zero()


def test_bracket_degree():
    rng = random.Random(1)
    d3 = random_n_image(2, 3, rng)
    d4 = random_n_image(2, 4, rng)
    assert bracket(d3, d4).degrees() in ([5], [])


def test_bracket_is_commutator_of_actions():
    rng = random.Random(2)
    d1, d2 = random_n_image(2, 3, rng), random_n_image(2, 2, rng)
    t = TensorElement.word(2, "a1b2a2")
    lhs = derive_tensor(bracket(d1, d2), t)
    rhs = derive_tensor(d1, derive_tensor(d2, t)) - derive_tensor(d2, derive_tensor(d1, t))
    assert lhs == rhs


@pytest.mark.parametrize("seed", range(5))
def test_skew_and_jacobi(seed):
    rng = random.Random(seed)
    x, y, z = (random_n_image(2, m, rng) for m in (2, 3, 2))
    assert bracket(x, y) == -bracket(y, x)
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jac.is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_bracket_stays_symplectic(seed):
    rng = random.Random(seed)
    x, y = random_n_image(2, 3, rng), random_n_image(2, 4, rng)
    assert annihilates_omega(bracket(x, y))
    assert raw_bracket(x.tensor(), y.tensor()) == bracket(x, y).tensor()


def test_lplus_examples():
    # N([A1, B1] Phi(A1 B1 A1)) cancels completely; a genus-2 word gives a nonzero generator
    assert lplus_generator(A1, B1, (A1, B1, A1), 1).is_zero()
    g = lplus_generator(A1, B1, (A2, B2, A1), 2)
    assert g.degrees() == [5]
    assert is_in_lplus(g)
    assert not is_in_lplus(N("a1b1"))
    assert not is_in_lplus(N("a1a1a1a1"))
    assert lplus_generator(A1, B1, (A1, A1, A1), 1).is_zero()
    assert lplus_generator(A1, A1, (A1, B1), 1).is_zero()


@pytest.mark.parametrize("genus,degree", [(1, 4), (1, 5), (2, 4)])
def test_generators_span_lplus(genus, degree):
    assert lplus_generator_rank(genus, degree) == lplus_brute_force_rank(genus, degree)


def test_json_roundtrip():
    d = N("a1b1a2b2", g=2)
    assert DerivationElement.from_json(d.to_json()) == d
