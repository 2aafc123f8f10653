"""Backend selection for the word kernels.

The compiled extension is used when it was built and ``GTALG_PURE_PYTHON`` is
not set to a non-empty value; otherwise the pure-Python module is used.
``BACKEND`` records which one was picked.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("GTALG_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

pairing = _impl.pairing
cyclic_sum = _impl.cyclic_sum
dynkin = _impl.dynkin
coproduct = _impl.coproduct
schedler = _impl.schedler
mu_alg = _impl.mu_alg
mu_zero_scaled = _impl.mu_zero_scaled
derive_word = _impl.derive_word
contract_first = _impl.contract_first
bullet = _impl.bullet

__all__ = [
    "BACKEND",
    "pairing",
    "cyclic_sum",
    "dynkin",
    "coproduct",
    "schedler",
    "mu_alg",
    "mu_zero_scaled",
    "derive_word",
    "contract_first",
    "bullet",
]
