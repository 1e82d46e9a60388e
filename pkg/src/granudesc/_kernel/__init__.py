"""Kernel dispatch.

The compiled backend (``_fast``, built from Cython) handles contexts with
at most 64 objects and 64 attributes; anything larger, or an interpreter
without the extension, falls back to the portable implementation.  Set
``GRANUDESC_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from collections.abc import Sequence

from granudesc._kernel import _pure

if os.environ.get("GRANUDESC_PURE"):
    _fast = None
else:
    try:
        from granudesc._kernel import _fast  # type: ignore[attr-defined]
    except ImportError:
        _fast = None

_WORD = 64


def backend_name() -> str:
    return "compiled" if _fast is not None else "pure"


def formal_concepts(cols: Sequence[int], n_objects: int) -> list[tuple[int, int]]:
    cols = list(cols)
    if _fast is not None and n_objects <= _WORD and len(cols) <= _WORD:
        return _fast.formal_concepts(cols, n_objects)
    return _pure.formal_concepts(cols, n_objects)


def minimal_cover_unions(
    cands: Sequence[int], target: int, strict: bool = False
) -> list[int]:
    cands = list(cands)
    width = max([target.bit_length()] + [c.bit_length() for c in cands])
    if _fast is not None and width <= _WORD and len(cands) <= _WORD:
        return _fast.minimal_cover_unions(cands, target, strict)
    return _pure.minimal_cover_unions(cands, target, strict)
