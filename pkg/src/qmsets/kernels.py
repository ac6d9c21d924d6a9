"""Backend selection for the bitset kernels.

The compiled extension is used when it was built; otherwise the pure-Python
twin is loaded. Set ``QMSETS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("QMSETS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
rref = _impl.rref
rank = _impl.rank
dependencies = _impl.dependencies
set_partitions = _impl.set_partitions
join_blocks = _impl.join_blocks
meet_blocks = _impl.meet_blocks
refines_blocks = _impl.refines_blocks

__all__ = [
    "BACKEND",
    "rref",
    "rank",
    "dependencies",
    "set_partitions",
    "join_blocks",
    "meet_blocks",
    "refines_blocks",
]
