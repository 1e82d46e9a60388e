from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from granudesc import (
    CompoundContext,
    FlavorMismatch,
    FormalContext,
    cn_extent,
    cn_intent,
    CnIntent,
    complement_context,
    compound_extent,
    compound_intent,
    extent,
    intent,
    necessity,
    possibility,
)

from .conftest import attrs, obj_names, objs, random_cn_context, random_context

# ---------------------------------------------------------------------------
# shared-attribute / shared-object operators
# ---------------------------------------------------------------------------


def test_intent_examples(table1: FormalContext) -> None:
    assert intent(table1, objs(table1, "2", "7")) == attrs(table1.attributes, "a1", "a2")
    assert intent(table1, frozenset()) == frozenset(range(5))
    assert intent(table1, frozenset(range(7))) == frozenset()


def test_extent_examples(table1: FormalContext) -> None:
    assert obj_names(table1, extent(table1, attrs(table1.attributes, "a5"))) == {"4", "5", "6"}
    assert extent(table1, frozenset()) == frozenset(range(7))
    assert obj_names(table1, extent(table1, attrs(table1.attributes, "a2", "a3"))) == {"1", "7"}


def test_index_validation(table1: FormalContext) -> None:
    with pytest.raises(ValueError):
        intent(table1, {7})
    with pytest.raises(ValueError):
        extent(table1, {5})


# ---------------------------------------------------------------------------
# compound (attribute + complement) operators
# ---------------------------------------------------------------------------


def flat(table3: CompoundContext, *names: str) -> frozenset[int]:
    return attrs(table3.flattened.attributes, *names)


def test_compound_intent_examples(table3: CompoundContext) -> None:
    assert compound_intent(table3, objs(table3, "2", "7")) == flat(
        table3, "a1", "a2", "not_a4", "not_a5"
    )
    assert compound_intent(table3, frozenset()) == frozenset(range(10))
    assert compound_intent(table3, objs(table3, "2", "3")) == flat(
        table3, "a1", "not_a3", "not_a4", "not_a5"
    )


def test_compound_extent_examples(table3: CompoundContext) -> None:
    got = compound_extent(table3, flat(table3, "a1", "a2", "not_a3", "not_a4", "not_a5"))
    assert obj_names(table3, got) == {"2"}
    assert compound_extent(table3, frozenset()) == frozenset(range(7))
    got = compound_extent(table3, flat(table3, "a1", "not_a3", "not_a4", "not_a5"))
    assert obj_names(table3, got) == {"2", "3"}


def test_compound_ops_reject_cn_flavor(table5: CompoundContext) -> None:
    with pytest.raises(FlavorMismatch):
        compound_intent(table5, {0})
    with pytest.raises(FlavorMismatch):
        compound_extent(table5, {0})


# ---------------------------------------------------------------------------
# possibility / necessity
# ---------------------------------------------------------------------------


def test_possibility_examples(table1: FormalContext) -> None:
    got = possibility(table1, attrs(table1.attributes, "a3", "a4", "a5"))
    assert obj_names(table1, got) == {"1", "4", "5", "6", "7"}
    assert possibility(table1, frozenset()) == frozenset()
    got = possibility(table1, attrs(table1.attributes, "a2", "a3", "a4"))
    assert obj_names(table1, got) == {"1", "2", "5", "6", "7"}


def test_necessity_examples(table1: FormalContext) -> None:
    got = necessity(table1, objs(table1, "1", "4", "5", "6", "7"))
    assert got == attrs(table1.attributes, "a3", "a4", "a5")
    assert necessity(table1, frozenset(range(7))) == frozenset(range(5))
    assert necessity(table1, objs(table1, "1", "2")) == frozenset()


# ---------------------------------------------------------------------------
# common-and-necessary operators
# ---------------------------------------------------------------------------


def test_cn_extent_examples(table5: CompoundContext) -> None:
    e = CnIntent(
        attrs(table5.a_attributes, "a1"), attrs(table5.b_attributes, "b2", "b4")
    )
    assert obj_names(table5, cn_extent(table5, e)) == {"2", "3", "7"}
    e = CnIntent(attrs(table5.a_attributes, "a1"), attrs(table5.b_attributes, "b3"))
    assert obj_names(table5, cn_extent(table5, e)) == {"2", "3"}
    # empty a-part means no conjunctive constraint; the b-part is a plain union
    e = CnIntent(frozenset(), frozenset(range(4)))
    assert cn_extent(table5, e) == frozenset(range(7))
    # empty b-part is an empty union
    assert cn_extent(table5, CnIntent(frozenset({0}), frozenset())) == frozenset()


def test_cn_intent_examples(table5: CompoundContext) -> None:
    got = cn_intent(table5, objs(table5, "2", "3", "7"))
    assert got.a_part == attrs(table5.a_attributes, "a1")
    assert got.b_part == attrs(table5.b_attributes, "b2", "b4")
    assert not got.no_b_cover

    got = cn_intent(table5, objs(table5, "2", "3"))
    assert got.a_part == attrs(table5.a_attributes, "a1")
    assert got.b_part == attrs(table5.b_attributes, "b3")

    got = cn_intent(table5, objs(table5, "1", "6", "7"))
    assert got.a_part == attrs(table5.a_attributes, "a3")
    assert got.b_part == attrs(table5.b_attributes, "b1", "b2")


def test_cn_intent_flags_missing_b_cover(scores: CompoundContext) -> None:
    # Peter sits in no elective-course extent, so no union can reach him
    got = cn_intent(scores, objs(scores, "Peter"))
    assert got.no_b_cover
    assert got.b_part == frozenset()
    assert got.a_part == frozenset(range(4))


def test_cn_intent_rejects_empty_granule(table5: CompoundContext) -> None:
    with pytest.raises(ValueError):
        cn_intent(table5, frozenset())


def test_cn_ops_reject_three_way_flavor(table3: CompoundContext) -> None:
    with pytest.raises(FlavorMismatch):
        cn_intent(table3, {0})
    with pytest.raises(FlavorMismatch):
        cn_extent(table3, CnIntent(frozenset(), frozenset()))


# ---------------------------------------------------------------------------
# derivation laws on random contexts
# ---------------------------------------------------------------------------


def _subsets(rng: random.Random, n: int) -> frozenset[int]:
    return frozenset(i for i in range(n) if rng.random() < 0.5)


@given(
    seed=st.integers(0, 2**32 - 1),
    n_obj=st.integers(1, 8),
    n_att=st.integers(1, 8),
    density=st.sampled_from([0.2, 0.5, 0.8]),
)
@settings(max_examples=200, deadline=None)
def test_derivation_laws(seed: int, n_obj: int, n_att: int, density: float) -> None:
    rng = random.Random(seed)
    ctx = random_context(rng, n_obj, n_att, density)
    x1, x2 = _subsets(rng, n_obj), _subsets(rng, n_obj)
    b1, b2 = _subsets(rng, n_att), _subsets(rng, n_att)

    # antitone on both sides
    if x1 <= x2:
        assert intent(ctx, x2) <= intent(ctx, x1)
    if b1 <= b2:
        assert extent(ctx, b2) <= extent(ctx, b1)
    # extensivity
    assert x1 <= extent(ctx, intent(ctx, x1))
    assert b1 <= intent(ctx, extent(ctx, b1))
    # idempotent closures
    assert intent(ctx, extent(ctx, intent(ctx, x1))) == intent(ctx, x1)
    assert extent(ctx, intent(ctx, extent(ctx, b1))) == extent(ctx, b1)
    # adjunction
    assert (x1 <= extent(ctx, b1)) == (b1 <= intent(ctx, x1))
    # union/intersection laws
    assert intent(ctx, x1 | x2) == intent(ctx, x1) & intent(ctx, x2)
    assert extent(ctx, b1 | b2) == extent(ctx, b1) & extent(ctx, b2)
    assert intent(ctx, x1 & x2) >= intent(ctx, x1) | intent(ctx, x2)
    assert extent(ctx, b1 & b2) >= extent(ctx, b1) | extent(ctx, b2)


@given(
    seed=st.integers(0, 2**32 - 1),
    n_obj=st.integers(1, 7),
    n_att=st.integers(1, 7),
    density=st.sampled_from([0.2, 0.5, 0.8]),
)
@settings(max_examples=120, deadline=None)
def test_possibility_necessity_duality(
    seed: int, n_obj: int, n_att: int, density: float
) -> None:
    rng = random.Random(seed)
    ctx = random_context(rng, n_obj, n_att, density)
    comp = complement_context(ctx)
    universe = frozenset(range(n_obj))
    b = _subsets(rng, n_att)
    x = _subsets(rng, n_obj)
    assert possibility(ctx, b) == universe - extent(comp, b)
    assert necessity(ctx, x) == intent(comp, universe - x)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=120, deadline=None)
def test_cn_closure_is_extensive(seed: int) -> None:
    rng = random.Random(seed)
    cctx = random_cn_context(rng, rng.randint(1, 6), rng.randint(1, 5), rng.randint(1, 5), 0.5)
    n = len(cctx.objects)
    x = _subsets(rng, n)
    if not x:
        return
    e = cn_intent(cctx, x)
    if e.no_b_cover or not e.a_part:
        return
    assert cn_extent(cctx, e) >= x
