"""Tightest definable bounds for granules that are not definable.

Upper bounds are closures: the least definable superset in the chosen
mode.  Lower bounds are strict: the maximal definable proper subsets,
found by covering the granule's complement with unions of (complemented)
attribute extents and keeping the inclusion-minimal achievable unions.
Each returned granule comes with a description that evaluates back to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from collections.abc import Iterable

from granudesc import _kernel
from granudesc._bits import is_subset, mask_of, set_of
from granudesc.context import (
    CompoundContext,
    Flavor,
    FormalContext,
    ObjectSet,
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
from granudesc.definability import Reason
from granudesc.errors import FlavorMismatch, Inapplicable
from granudesc.formula import (
    Description,
    conj_disj,
    conj_of,
    disj_of,
    evaluate,
    three_way_conj,
)


class Direction(Enum):
    UPPER = "upper"
    LOWER = "lower"


class Mode(Enum):
    WEDGE = "wedge"
    THREE_WAY = "three_way"
    VEE = "vee"
    CN = "cn"


@dataclass(frozen=True)
class Approximation:
    direction: Direction
    mode: Mode
    granules: tuple[tuple[ObjectSet, Description | None], ...]
    exact: bool


@dataclass(frozen=True)
class CoverProblem:
    """Candidate attribute extents and a target to cover by their union."""

    candidates: tuple[tuple[int, ObjectSet], ...]
    target: ObjectSet

    def __post_init__(self) -> None:
        ids = [i for i, _ in self.candidates]
        if len(ids) != len(set(ids)):
            raise ValueError("candidate attribute ids must be unique")


def enumerate_minimal_covers(
    problem: CoverProblem, strict: bool = False
) -> list[tuple[frozenset[int], ObjectSet]]:
    """All inclusion-minimal achievable unions containing the target.

    For every minimal union the returned attribute set is the largest one
    producing it: every candidate with a non-empty extent inside the
    union.  The empty target is covered by the empty union.
    """
    cand = [(i, mask_of(ext)) for i, ext in problem.candidates]
    target = mask_of(problem.target)
    unions = _kernel.minimal_cover_unions([m for _, m in cand], target, strict)
    results = []
    for y in unions:
        ids = frozenset(i for i, m in cand if m and is_subset(m, y))
        results.append((ids, set_of(y)))
    results.sort(key=lambda r: (len(r[1]), tuple(sorted(r[1]))))
    return results


def _check_eval(
    ctx: FormalContext | CompoundContext, granule: ObjectSet, d: Description
) -> None:
    got = evaluate(ctx, d)
    if got != granule:
        raise AssertionError(
            f"description {d!r} evaluates to {sorted(got)}, not {sorted(granule)}"
        )


def _sorted_granules(
    items: list[tuple[ObjectSet, Description | None]]
) -> tuple[tuple[ObjectSet, Description | None], ...]:
    return tuple(sorted(items, key=lambda g: (len(g[0]), tuple(sorted(g[0])))))


# ---------------------------------------------------------------------------
# conjunctive mode
# ---------------------------------------------------------------------------


def upper_wedge(ctx: FormalContext, objects: Iterable[int]) -> Approximation:
    """Least conjunctively definable superset: the closure of the granule."""
    x = frozenset(objects)
    shared = intent(ctx, x)
    if not shared:
        raise Inapplicable(Reason.EMPTY_INTENT, "the granule shares no attribute")
    closure = extent(ctx, shared)
    d = conj_of(ctx, shared)
    _check_eval(ctx, closure, d)
    return Approximation(Direction.UPPER, Mode.WEDGE, ((closure, d),), closure == x)


def _lower_by_covers(
    n_objects: int,
    x: frozenset[int],
    columns: list[int],
    build,
    ctx,
    mode: Mode,
    exact: bool,
) -> Approximation:
    """Shared machinery for strict conjunctive lower bounds.

    Complement extents that meet the complement of the granule are the
    natural cover candidates; candidates disjoint from it are still
    admitted to the search (they can only matter when the granule itself
    is definable) so that every maximal definable proper subset is found.
    The reported attribute set sticks to the meeting candidates whenever
    they generate the union.
    """
    full = (1 << n_objects) - 1
    xm = mask_of(x)
    target = full & ~xm
    comp = [(j, full & ~col) for j, col in enumerate(columns)]
    pool = [(j, c) for j, c in comp if c]
    unions = _kernel.minimal_cover_unions([c for _, c in pool], target, strict=True)
    granules: list[tuple[ObjectSet, Description | None]] = []
    for y in unions:
        meeting = [j for j, c in pool if is_subset(c, y) and c & target]
        covered = 0
        for j in meeting:
            covered |= comp[j][1]
        attrs = meeting if covered == y else [j for j, c in pool if is_subset(c, y)]
        granule = set_of(full & ~y)
        d = build(attrs)
        _check_eval(ctx, granule, d)
        granules.append((granule, d))
    return Approximation(Direction.LOWER, mode, _sorted_granules(granules), exact)


def lower_wedge(ctx: FormalContext, objects: Iterable[int]) -> Approximation:
    """Maximal conjunctively definable proper subsets of the granule."""
    x = frozenset(objects)
    object_mask(ctx, x)
    if len(x) == ctx.n_objects:
        raise ValueError("lower_wedge needs a proper subset of the objects")
    shared = intent(ctx, x)
    exact = bool(shared) and extent(ctx, shared) == x
    return _lower_by_covers(
        ctx.n_objects,
        x,
        list(ctx.column_masks),
        lambda attrs: conj_of(ctx, attrs),
        ctx,
        Mode.WEDGE,
        exact,
    )


# ---------------------------------------------------------------------------
# three-way mode
# ---------------------------------------------------------------------------


def upper_three_way(cctx: CompoundContext, objects: Iterable[int]) -> Approximation:
    """Closure over the attribute-and-complement compound."""
    if cctx.flavor is not Flavor.THREE_WAY:
        raise FlavorMismatch("upper_three_way needs a three_way compound")
    x = frozenset(objects)
    shared = compound_intent(cctx, x)
    if not shared:
        raise Inapplicable(Reason.EMPTY_INTENT, "the granule shares no attribute")
    closure = compound_extent(cctx, shared)
    d = three_way_conj(cctx, shared)
    _check_eval(cctx, closure, d)
    return Approximation(
        Direction.UPPER, Mode.THREE_WAY, ((closure, d),), closure == x
    )


def lower_three_way(cctx: CompoundContext, objects: Iterable[int]) -> Approximation:
    """Maximal three-way definable proper subsets of the granule."""
    if cctx.flavor is not Flavor.THREE_WAY:
        raise FlavorMismatch("lower_three_way needs a three_way compound")
    x = frozenset(objects)
    object_mask(cctx, x)
    if len(x) == cctx.n_objects:
        raise ValueError("lower_three_way needs a proper subset of the objects")
    flat = cctx.flattened
    shared = compound_intent(cctx, x)
    exact = bool(shared) and compound_extent(cctx, shared) == x
    return _lower_by_covers(
        cctx.n_objects,
        x,
        list(flat.column_masks),
        lambda attrs: three_way_conj(cctx, attrs),
        cctx,
        Mode.THREE_WAY,
        exact,
    )


# ---------------------------------------------------------------------------
# disjunctive mode
# ---------------------------------------------------------------------------


def lower_vee(ctx: FormalContext, objects: Iterable[int]) -> Approximation:
    """Greatest disjunctively definable subset; unique, possibly empty."""
    x = frozenset(objects)
    inside = necessity(ctx, x)
    granule = possibility(ctx, inside)
    full_inside = necessity(ctx, granule)
    d = disj_of(ctx, full_inside) if full_inside else None
    if d is not None:
        _check_eval(ctx, granule, d)
    exact = granule == x and d is not None
    return Approximation(Direction.LOWER, Mode.VEE, ((granule, d),), exact)


def upper_vee(ctx: FormalContext, objects: Iterable[int]) -> Approximation:
    """Minimal unions of attribute extents containing the granule."""
    x = frozenset(objects)
    xm = object_mask(ctx, x)
    if not x:
        raise ValueError("upper_vee needs a non-empty granule")
    pool = [(j, col) for j, col in enumerate(ctx.column_masks) if col & xm]
    covered = 0
    for _, col in pool:
        covered |= col
    if not is_subset(xm, covered):
        raise Inapplicable(
            Reason.EMPTY_INTENT,
            "some object of the granule appears in no attribute extent",
        )
    unions = _kernel.minimal_cover_unions([c for _, c in pool], xm, strict=False)
    granules: list[tuple[ObjectSet, Description | None]] = []
    exact = False
    for y in unions:
        attrs = [j for j, c in pool if is_subset(c, y)]
        granule = set_of(y)
        d = disj_of(ctx, attrs)
        _check_eval(ctx, granule, d)
        exact = exact or y == xm
        granules.append((granule, d))
    return Approximation(Direction.UPPER, Mode.VEE, _sorted_granules(granules), exact)


# ---------------------------------------------------------------------------
# common-and-necessary mode
# ---------------------------------------------------------------------------


def upper_cn(cctx: CompoundContext, objects: Iterable[int]) -> Approximation:
    """Least two-part definable superset: the two-part closure."""
    if cctx.flavor is not Flavor.COMMON_NECESSARY:
        raise FlavorMismatch("upper_cn needs a common_necessary compound")
    x = frozenset(objects)
    xm = object_mask(cctx, x)
    if not x:
        raise ValueError("upper_cn needs a non-empty granule")
    if not any(is_subset(xm, col) for col in cctx.a_block.column_masks):
        raise Inapplicable(
            Reason.EMPTY_A_PART, "no a-attribute extent contains the granule"
        )
    coverable = 0
    for col in cctx.b_block.column_masks:
        coverable |= col
    if not is_subset(xm, coverable):
        raise Inapplicable(
            Reason.NO_B_COVER, "no union of b-extents covers the granule"
        )
    e = cn_intent(cctx, x)
    closure = cn_extent(cctx, e)
    d = conj_disj(cctx, e.a_part, e.b_part)
    _check_eval(cctx, closure, d)
    return Approximation(Direction.UPPER, Mode.CN, ((closure, d),), closure == x)
