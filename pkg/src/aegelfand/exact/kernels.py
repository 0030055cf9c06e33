"""Backend selection for the integer polynomial kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Setting ``AEGELFAND_PURE=1`` forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("AEGELFAND_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        from . import _kernels_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("._kernels") else "python"

trim = _impl.trim
content = _impl.content
primitive = _impl.primitive
derivative = _impl.derivative
mul = _impl.mul
eval_homog = _impl.eval_homog
sign_at = _impl.sign_at
sign_at_inf = _impl.sign_at_inf
prem = _impl.prem
gcd_poly = _impl.gcd_poly
sturm_sequence = _impl.sturm_sequence
variations = _impl.variations
variations_inf = _impl.variations_inf

__all__ = [
    "BACKEND",
    "trim",
    "content",
    "primitive",
    "derivative",
    "mul",
    "eval_homog",
    "sign_at",
    "sign_at_inf",
    "prem",
    "gcd_poly",
    "sturm_sequence",
    "variations",
    "variations_inf",
]
