"""The compiled and pure-Python kernels must agree term for term."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from gtalg import _kernels_py, kernels

cy = pytest.importorskip("gtalg._kernels")

words = st.lists(st.integers(0, 5), min_size=0, max_size=7).map(tuple)
nonempty = st.lists(st.integers(0, 5), min_size=1, max_size=7).map(tuple)


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@settings(max_examples=200)
@given(nonempty)
def test_single_word_kernels_agree(w):
    for name in ("cyclic_sum", "dynkin", "coproduct", "schedler", "mu_alg", "mu_zero_scaled"):
        assert getattr(cy, name)(w) == getattr(_kernels_py, name)(w), name


@given(nonempty, words)
def test_two_word_kernels_agree(u, v):
    assert cy.derive_word(u, v) == _kernels_py.derive_word(u, v)
    if v:
        assert cy.bullet(u, v) == _kernels_py.bullet(u, v)


@given(st.integers(0, 5), st.integers(0, 5))
def test_pairing_agrees(x, y):
    assert cy.pairing(x, y) == _kernels_py.pairing(x, y)


@given(st.lists(st.integers(0, 5), min_size=2, max_size=7).map(tuple))
def test_contract_agrees(w):
    assert cy.contract_first(w) == _kernels_py.contract_first(w)


def test_env_var_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, GTALG_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import gtalg.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
