"""Kernel selection: compiled ``_ckernels`` when importable, else ``_pykernels``.

Set ``QLATTICE_PURE=1`` to force the pure-Python path.
"""

import os

BACKEND = "python"

if os.environ.get("QLATTICE_PURE", "") not in ("", "0"):
    from ._pykernels import cyc_content, cyc_fold, cyc_mul
else:
    try:
        from ._ckernels import cyc_content, cyc_fold, cyc_mul

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._pykernels import cyc_content, cyc_fold, cyc_mul

__all__ = ["BACKEND", "cyc_content", "cyc_fold", "cyc_mul"]
