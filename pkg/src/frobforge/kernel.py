"""Kernel selection: compiled speedups when available, pure Python otherwise.

FROBFORGE_PURE_PYTHON=1 forces the pure kernel (used by the benchmark and by
CI to exercise both paths).
"""

import os

if os.environ.get("FROBFORGE_PURE_PYTHON") == "1":
    from frobforge import _kernel_py as _impl
else:
    try:
        from frobforge import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from frobforge import _kernel_py as _impl

BACKEND = _impl.BACKEND
axpy = _impl.axpy
axpy_vec = _impl.axpy_vec
mul_terms = _impl.mul_terms
termwise_power = _impl.termwise_power
