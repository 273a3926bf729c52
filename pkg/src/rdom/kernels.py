"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``RDOM_PURE=1`` in the environment to force the pure-Python kernels even
when the compiled module is importable. ``ACTIVE`` reports which one won.
"""

from __future__ import annotations

import os

if os.environ.get("RDOM_PURE", "") in ("1", "true", "yes"):
    from rdom import _pykernels as _impl

    ACTIVE = "python"
else:
    try:
        from rdom import _kernels as _impl  # type: ignore[attr-defined]

        ACTIVE = "compiled"
    except ImportError:
        from rdom import _pykernels as _impl

        ACTIVE = "python"

CERT_MAX_N = _impl.CERT_MAX_N
solve_min = _impl.solve_min
canonical_form = _impl.canonical_form
