"""Backend selection for the sweep kernels.

The compiled (numba) backend is the default.  Setting the environment
variable ``LATMOD_PURE_NUMPY=1`` before import selects the vectorized
numpy fallback; the fallback also engages automatically when numba is not
installed.  Both backends return identical arrays and witnesses.
"""

from __future__ import annotations

import os

from . import _kernels_np

_KERNEL_NAMES = [
    "mul_axiom_witnesses",
    "module_axiom_witnesses",
    "residual_scalar_table",
    "power_cap_vec",
    "radical_vec",
    "principal_scalar_flags",
    "scalar_classification_flags",
    "scalar_dl_primary_flags",
    "residual_mm_table",
    "residual_ma_table",
    "module_prime_primary_flags",
    "module_semiprime_flags",
    "module_meet_prime_flags",
    "module_2abs_flags",
    "module_principal_flags",
    "delta_primary_flags",
    "deltaL_primary_flags",
    "char_residual_form",
    "char_colon_form",
]


def _load_numba_backend():
    from numba import njit

    from . import _kernels_nb

    compiled = {}
    for name in _KERNEL_NAMES:
        compiled[name] = njit(cache=True)(getattr(_kernels_nb, name))
    return compiled


BACKEND = "numpy"
if os.environ.get("LATMOD_PURE_NUMPY", "") != "1":
    try:
        _impl = _load_numba_backend()
        BACKEND = "numba"
    except ImportError:
        _impl = {name: getattr(_kernels_np, name) for name in _KERNEL_NAMES}
else:
    _impl = {name: getattr(_kernels_np, name) for name in _KERNEL_NAMES}

globals().update(_impl)

__all__ = _KERNEL_NAMES + ["BACKEND"]
