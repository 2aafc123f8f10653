"""Exact graded computations around the Goldman-Turaev Lie bialgebra of a
once-bordered surface, and the power-series obstruction for twists along
non-simple loops."""

from __future__ import annotations

from .kernels import BACKEND
from .tensor import PairTensorElement, TensorElement, parse_word, word_str
from .derivations import DerivationElement, bracket
from .exact import TruncatedSeries, bernoulli, obstruction_series, s_series
from .goldman_turaev import delta_alg, delta_theta_part, mu_alg, mu_theta_0, schedler_delta
from .morita import morita_trace, verify_54trace
from .twist import GaussCode, obstruction_verdict

__all__ = [
    "BACKEND",
    "DerivationElement",
    "GaussCode",
    "PairTensorElement",
    "TensorElement",
    "TruncatedSeries",
    "bernoulli",
    "bracket",
    "delta_alg",
    "delta_theta_part",
    "morita_trace",
    "mu_alg",
    "mu_theta_0",
    "obstruction_series",
    "obstruction_verdict",
    "parse_word",
    "s_series",
    "schedler_delta",
    "verify_54trace",
    "word_str",
]
