"""Select the compiled term kernels when built, else the Python ones.

Set ``SEIDS_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("SEIDS_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

COMPILED = _impl.__name__.endswith("._kernels")

divides = _impl.divides
term_mul = _impl.term_mul
term_div = _impl.term_div
term_lcm = _impl.term_lcm
coprime = _impl.coprime
axpy = _impl.axpy
scaled = _impl.scaled
degree = _impl.degree

__all__ = ["COMPILED", "divides", "term_mul", "term_div", "term_lcm",
           "coprime", "axpy", "scaled", "degree"]
