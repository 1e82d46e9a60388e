"""Definability verdicts for granules under the four description modes.

A granule is definable in a mode when some formula of that mode evaluates
to exactly the granule:

* conjunctive mode: a conjunction of attributes;
* three-way mode: a conjunction allowing negated attributes, decided on
  the attribute-and-complement compound;
* disjunctive mode: a disjunction of attributes;
* common-and-necessary mode: an a-block conjunction and-ed with a
  b-block disjunct, each part non-empty.

Verdicts separate "indefinable" (the closure differs) from
"inapplicable" (the mode's premise fails, e.g. no shared attribute).
Every definable verdict carries a description that evaluates back to the
granule; that round trip is asserted before returning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from collections.abc import Callable, Iterable

from granudesc._bits import is_subset, mask_of
from granudesc.context import (
    CompoundContext,
    Flavor,
    FormalContext,
    ObjectSet,
    complement_context,
)
from granudesc.derivation import (
    cn_extent,
    cn_intent,
    compound_extent,
    compound_intent,
    extent,
    intent,
    necessity,
    object_mask,
    possibility,
)
from granudesc.errors import FlavorMismatch, Inapplicable
from granudesc.formula import (
    ConjDisj,
    Description,
    conj_disj,
    conj_of,
    disj_of,
    evaluate,
    three_way_conj,
)


class Status(Enum):
    DEFINABLE = "definable"
    INDEFINABLE = "indefinable"
    INAPPLICABLE = "inapplicable"


class Reason(Enum):
    EMPTY_INTENT = "empty_intent"
    NO_B_COVER = "no_b_cover"
    EMPTY_A_PART = "empty_a_part"


@dataclass(frozen=True)
class Verdict:
    status: Status
    description: Description | None = None
    reason: Reason | None = None
    witness: ObjectSet | None = None


def _definable(
    ctx: FormalContext | CompoundContext, x: frozenset[int], d: Description
) -> Verdict:
    check = evaluate(ctx, d)
    if check != x:
        raise AssertionError(
            f"description {d!r} evaluates to {sorted(check)}, not {sorted(x)}"
        )
    return Verdict(Status.DEFINABLE, description=d)


def is_wedge_definable(ctx: FormalContext, objects: Iterable[int]) -> Verdict:
    """Conjunctive definability: the granule equals the extent of its intent."""
    x = frozenset(objects)
    shared = intent(ctx, x)
    if not shared:
        return Verdict(Status.INAPPLICABLE, reason=Reason.EMPTY_INTENT)
    closure = extent(ctx, shared)
    if closure == x:
        return _definable(ctx, x, conj_of(ctx, shared))
    return Verdict(Status.INDEFINABLE, witness=closure)


def find_covering_elements(ctx: FormalContext, objects: Iterable[int]) -> ObjectSet:
    """Outside objects carrying every shared attribute of the granule.

    Their absence is equivalent to conjunctive definability.  Raises
    ``Inapplicable`` when the granule has no shared attribute.
    """
    x = frozenset(objects)
    shared = intent(ctx, x)
    if not shared:
        raise Inapplicable(Reason.EMPTY_INTENT, "the granule shares no attribute")
    return extent(ctx, shared) - x


def is_three_way_definable(cctx: CompoundContext, objects: Iterable[int]) -> Verdict:
    """Conjunctive definability over the attribute-and-complement compound."""
    if cctx.flavor is not Flavor.THREE_WAY:
        raise FlavorMismatch("is_three_way_definable needs a three_way compound")
    x = frozenset(objects)
    shared = compound_intent(cctx, x)
    if not shared:
        return Verdict(Status.INAPPLICABLE, reason=Reason.EMPTY_INTENT)
    closure = compound_extent(cctx, shared)
    if closure == x:
        return _definable(cctx, x, three_way_conj(cctx, shared))
    return Verdict(Status.INDEFINABLE, witness=closure)


def is_vee_definable(ctx: FormalContext, objects: Iterable[int]) -> Verdict:
    """Disjunctive definability: the granule is the union of the attribute
    extents it fully contains."""
    x = frozenset(objects)
    inside = necessity(ctx, x)
    if not inside:
        return Verdict(Status.INAPPLICABLE, reason=Reason.EMPTY_INTENT)
    closure = possibility(ctx, inside)
    if closure == x:
        return _definable(ctx, x, disj_of(ctx, inside))
    return Verdict(Status.INDEFINABLE, witness=closure)


def is_vee_definable_via_complement(
    ctx: FormalContext, objects: Iterable[int]
) -> Verdict:
    """Disjunctive definability decided on the complement context.

    The granule is disjunctively definable exactly when its complement is
    conjunctively closed over the complemented table.  Diagnostic twin of
    ``is_vee_definable``; both return identical verdicts.
    """
    x = frozenset(objects)
    comp = complement_context(ctx)
    rest = frozenset(range(ctx.n_objects)) - frozenset(
        _checked_objects(ctx, x)
    )
    shared = intent(comp, rest)
    if not shared:
        return Verdict(Status.INAPPLICABLE, reason=Reason.EMPTY_INTENT)
    closure = extent(comp, shared)
    if closure == rest:
        return _definable(ctx, x, disj_of(ctx, shared))
    witness = frozenset(range(ctx.n_objects)) - closure
    return Verdict(Status.INDEFINABLE, witness=witness)


def _checked_objects(ctx: FormalContext | CompoundContext, objects: Iterable[int]) -> frozenset[int]:
    x = frozenset(objects)
    object_mask(ctx, x)  # bounds check
    return x


def is_cn_definable(cctx: CompoundContext, objects: Iterable[int]) -> Verdict:
    """Two-part definability: a non-empty a-part conjunction intersected
    with a non-empty b-part disjunct must give back the granule."""
    if cctx.flavor is not Flavor.COMMON_NECESSARY:
        raise FlavorMismatch("is_cn_definable needs a common_necessary compound")
    x = _checked_objects(cctx, objects)
    if not x:
        raise ValueError("is_cn_definable needs a non-empty granule")
    xm = mask_of(x)
    a_cols = cctx.a_block.column_masks
    if not any(is_subset(xm, col) for col in a_cols):
        return Verdict(Status.INAPPLICABLE, reason=Reason.EMPTY_A_PART)
    coverable = 0
    for col in cctx.b_block.column_masks:
        coverable |= col
    if not is_subset(xm, coverable):
        return Verdict(Status.INAPPLICABLE, reason=Reason.NO_B_COVER)
    e = cn_intent(cctx, x)
    closure = cn_extent(cctx, e)
    if closure == x:
        return _definable(cctx, x, conj_disj(cctx, e.a_part, e.b_part))
    return Verdict(Status.INDEFINABLE, witness=closure)


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------


def intersect_descriptions(
    ctx: FormalContext | CompoundContext,
    first: Iterable[int],
    second: Iterable[int],
    mode: str = "wedge",
) -> Verdict:
    """Description of the intersection of two conjunctively definable
    granules: the union of their intents, which always closes back."""
    if mode == "wedge":
        check = is_wedge_definable
        get_intent = intent
        build = conj_of
    elif mode == "three_way":
        check = is_three_way_definable
        get_intent = compound_intent
        build = three_way_conj
    else:
        raise ValueError("mode must be 'wedge' or 'three_way'")
    x = frozenset(first)
    y = frozenset(second)
    if check(ctx, x).status is not Status.DEFINABLE:
        return Verdict(Status.INAPPLICABLE)
    if check(ctx, y).status is not Status.DEFINABLE:
        return Verdict(Status.INAPPLICABLE)
    merged = get_intent(ctx, x) | get_intent(ctx, y)
    return _definable(ctx, x & y, build(ctx, merged))


def union_vee_descriptions(
    ctx: FormalContext, first: Iterable[int], second: Iterable[int]
) -> Verdict:
    """Description of the union of two disjunctively definable granules."""
    x = frozenset(first)
    y = frozenset(second)
    if is_vee_definable(ctx, x).status is not Status.DEFINABLE:
        return Verdict(Status.INAPPLICABLE)
    if is_vee_definable(ctx, y).status is not Status.DEFINABLE:
        return Verdict(Status.INAPPLICABLE)
    merged = necessity(ctx, x) | necessity(ctx, y)
    return _definable(ctx, x | y, disj_of(ctx, merged))


# ---------------------------------------------------------------------------
# minimal descriptions (exhaustive, optional diagnostics)
# ---------------------------------------------------------------------------


def _minimal_subsets(
    base: list[int], keeps: Callable[[frozenset[int]], bool]
) -> list[frozenset[int]]:
    """Inclusion-minimal non-empty subsets of base satisfying the predicate."""
    hits: list[frozenset[int]] = []
    for size in range(1, len(base) + 1):
        for combo in itertools.combinations(base, size):
            s = frozenset(combo)
            if any(h <= s for h in hits):
                continue
            if keeps(s):
                hits.append(s)
    return sorted(hits, key=lambda s: (len(s), tuple(sorted(s))))


def minimal_descriptions(
    ctx: FormalContext | CompoundContext,
    objects: Iterable[int],
    mode: str,
) -> list[Description]:
    """All inclusion-minimal descriptions of a definable granule.

    Exhaustive search; intended for small contexts and the --minimal flag.
    """
    x = frozenset(objects)
    if mode == "wedge":
        base = sorted(intent(ctx, x))
        keep = lambda s: extent(ctx, s) == x
        return [conj_of(ctx, s) for s in _minimal_subsets(base, keep)]
    if mode == "three_way":
        base = sorted(compound_intent(ctx, x))
        keep = lambda s: compound_extent(ctx, s) == x
        return [three_way_conj(ctx, s) for s in _minimal_subsets(base, keep)]
    if mode == "vee":
        base = sorted(necessity(ctx, x))
        keep = lambda s: possibility(ctx, s) == x
        return [disj_of(ctx, s) for s in _minimal_subsets(base, keep)]
    if mode == "cn":
        return _minimal_cn_descriptions(ctx, x)
    raise ValueError(f"unknown mode {mode!r}")


def _minimal_cn_descriptions(
    cctx: CompoundContext, x: frozenset[int]
) -> list[ConjDisj]:
    xm = mask_of(x)
    a_cols = cctx.a_block.column_masks
    b_cols = cctx.b_block.column_masks
    a_base = [j for j, col in enumerate(a_cols) if is_subset(xm, col)]
    b_base = list(range(len(b_cols)))
    hits: list[tuple[frozenset[int], frozenset[int]]] = []
    for asize in range(1, len(a_base) + 1):
        for ac in itertools.combinations(a_base, asize):
            g = cctx.a_block.full_object_mask
            for j in ac:
                g &= a_cols[j]
            for bsize in range(1, len(b_base) + 1):
                for bc in itertools.combinations(b_base, bsize):
                    pair = (frozenset(ac), frozenset(bc))
                    if any(h[0] <= pair[0] and h[1] <= pair[1] for h in hits):
                        continue
                    y = 0
                    for j in bc:
                        y |= b_cols[j]
                    if g & y == xm:
                        hits.append(pair)
    hits.sort(
        key=lambda h: (
            len(h[0]) + len(h[1]),
            tuple(sorted(h[0])),
            tuple(sorted(h[1])),
        )
    )
    return [conj_disj(cctx, a, b) for a, b in hits]
