"""Backend selection for the hot graph kernels.

The compiled extension ``graphtopo._kernels`` is used when it imports and the
graph fits in a 64-bit row; otherwise the pure-Python implementation runs.
Set ``GRAPHTOPO_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

try:
    if os.environ.get("GRAPHTOPO_PURE_PYTHON"):
        raise ImportError("pure-Python kernels forced")
    from . import _kernels as _c
except ImportError:
    _c = None

BACKEND = "compiled" if _c is not None else "python"
WORD = 64

iter_bits = _py.iter_bits
bits = _py.bits
subrows = _py.subrows
is_connected_mask = _py.is_connected_mask
cone_vertex = _py.cone_vertex
form_bytes = _py.form_bytes


def _fast(n: int) -> bool:
    return _c is not None and n <= WORD


def canonical_labeling(rows, n: int):
    if _fast(n):
        return _c.canonical_labeling(rows, n)
    return _py.canonical_labeling(rows, n)


def canonical_key(rows, n: int) -> bytes:
    if _fast(n):
        return _c.canonical_key(rows, n)
    return _py.canonical_key(rows, n)


def clique_counts_mask(rows, mask: int) -> list[int]:
    if _fast(len(rows)):
        return _c.clique_counts_mask(rows, mask)
    return _py.clique_counts_mask(rows, mask)


def contractible_mask(rows, mask: int, cache: dict, use_euler: bool = True) -> bool:
    if _fast(len(rows)):
        return _c.contractible_mask(rows, mask, cache, use_euler)
    if mask.bit_count() <= WORD and _c is not None:
        sub = _py.subrows(rows, mask)
        return _c.contractible(sub, len(sub), cache, use_euler)
    return _py.contractible_mask(rows, mask, cache, use_euler)


def contractible(rows, n: int, cache: dict, use_euler: bool = True) -> bool:
    return contractible_mask(rows, (1 << n) - 1, cache, use_euler)
