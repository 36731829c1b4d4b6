"""Backend selection: compiled kernels when available, pure Python otherwise.

Set ``KEYGRAPH_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by CI on platforms without a compiler). Both backends are input/output
identical, so the selection never affects results.
"""

from __future__ import annotations

import os

if os.environ.get("KEYGRAPH_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION
sample_picks = _impl.sample_picks
connected = _impl.connected
has_articulation = _impl.has_articulation
