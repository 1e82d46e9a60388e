"""Derivation operators over contexts.

For a formal context: ``intent`` collects the attributes shared by every
object of a granule, ``extent`` the objects carrying every attribute of a
set.  ``possibility`` and ``necessity`` are their disjunctive duals: the
union of attribute extents, and the attributes whose whole extent lies
inside a granule.  Compound operators work on the flattened two-block
table; the common-and-necessary pair combines a conjunctive a-part with a
disjunctive b-part.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from granudesc import _kernel
from granudesc._bits import bits, is_subset, mask_of, member_vector, set_of
from granudesc.context import (
    AttributeSet,
    CompoundContext,
    Flavor,
    FormalContext,
    ObjectSet,
)
from granudesc.errors import FlavorMismatch


def object_mask(ctx: FormalContext | CompoundContext, objects: Iterable[int]) -> int:
    m = mask_of(_checked(objects, ctx.n_objects, "object"))
    return m


def _checked(indices: Iterable[int], bound: int, kind: str) -> frozenset[int]:
    s = frozenset(indices)
    for i in s:
        if not 0 <= i < bound:
            raise ValueError(f"{kind} index {i} out of range 0..{bound - 1}")
    return s


def _attr_mask(ctx: FormalContext, attrs: Iterable[int]) -> int:
    return mask_of(_checked(attrs, ctx.n_attributes, "attribute"))


def intent(ctx: FormalContext, objects: Iterable[int]) -> AttributeSet:
    """Attributes common to every object of the granule; all of them for the empty granule."""
    m = object_mask(ctx, objects)
    result = ctx.full_attribute_mask
    for i in bits(m):
        result &= ctx.row_masks[i]
    return set_of(result)


def extent(ctx: FormalContext, attrs: Iterable[int]) -> ObjectSet:
    """Objects carrying every attribute of the set; all of them for the empty set."""
    m = _attr_mask(ctx, attrs)
    result = ctx.full_object_mask
    for j in bits(m):
        result &= ctx.column_masks[j]
    return set_of(result)


def possibility(ctx: FormalContext, attrs: Iterable[int]) -> ObjectSet:
    """Union of the attribute extents; empty for the empty set."""
    m = _attr_mask(ctx, attrs)
    result = 0
    for j in bits(m):
        result |= ctx.column_masks[j]
    return set_of(result)


def necessity(ctx: FormalContext, objects: Iterable[int]) -> AttributeSet:
    """Attributes whose whole extent lies inside the granule."""
    m = object_mask(ctx, objects)
    return frozenset(
        j for j in range(ctx.n_attributes) if is_subset(ctx.column_masks[j], m)
    )


def _require_flavor(cctx: CompoundContext, flavor: Flavor, op: str) -> None:
    if not isinstance(cctx, CompoundContext):
        raise FlavorMismatch(f"{op} needs a compound context")
    if cctx.flavor is not flavor:
        raise FlavorMismatch(
            f"{op} needs a {flavor.value} compound, got {cctx.flavor.value}"
        )


def compound_intent(cctx: CompoundContext, objects: Iterable[int]) -> AttributeSet:
    """Shared attributes over both blocks, as flattened indices."""
    _require_flavor(cctx, Flavor.THREE_WAY, "compound_intent")
    return intent(cctx.flattened, objects)


def compound_extent(cctx: CompoundContext, attrs: Iterable[int]) -> ObjectSet:
    """Objects carrying every flattened attribute of the set."""
    _require_flavor(cctx, Flavor.THREE_WAY, "compound_extent")
    return extent(cctx.flattened, attrs)


@dataclass(frozen=True)
class CnIntent:
    """Two-part description seed: conjunctive a-part, disjunctive b-part.

    ``no_b_cover`` marks granules no union of b-extents contains; the
    b-part is empty in that case.
    """

    a_part: AttributeSet
    b_part: AttributeSet
    no_b_cover: bool = False


def cn_extent(cctx: CompoundContext, e: CnIntent) -> ObjectSet:
    """Objects in every a-part extent and in at least one b-part extent."""
    _require_flavor(cctx, Flavor.COMMON_NECESSARY, "cn_extent")
    conj = extent(cctx.a_block, e.a_part)
    disj = possibility(cctx.b_block, e.b_part)
    return conj & disj


def cn_intent(cctx: CompoundContext, objects: Iterable[int]) -> CnIntent:
    """Canonical two-part intent of a non-empty granule.

    The a-part is the unique maximum: every a-attribute whose extent
    contains the granule.  Among all inclusion-minimal unions of b-extents
    covering the granule, the b-part keeps the union that adds fewest
    objects inside the a-part extent (ties: smaller union, then
    lexicographically least membership), and then takes every b-attribute
    whose non-empty extent fits inside that union.
    """
    _require_flavor(cctx, Flavor.COMMON_NECESSARY, "cn_intent")
    x = object_mask(cctx, objects)
    if x == 0:
        raise ValueError("cn_intent needs a non-empty granule")
    a_cols = cctx.a_block.column_masks
    b_cols = cctx.b_block.column_masks
    a_part = frozenset(j for j, col in enumerate(a_cols) if is_subset(x, col))
    g = cctx.a_block.full_object_mask
    for j in a_part:
        g &= a_cols[j]

    coverable = 0
    for col in b_cols:
        coverable |= col
    if not is_subset(x, coverable):
        return CnIntent(a_part, frozenset(), no_b_cover=True)

    unions = _kernel.minimal_cover_unions(b_cols, x)
    n = cctx.n_objects
    best = min(
        unions,
        key=lambda y: (
            bin(g & y).count("1"),
            bin(y).count("1"),
            member_vector(y, n),
        ),
    )
    b_part = frozenset(
        j for j, col in enumerate(b_cols) if col and is_subset(col, best)
    )
    return CnIntent(a_part, b_part)
