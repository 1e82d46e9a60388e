"""Logical descriptions of granules and their evaluation.

A description is a conjunction of atoms, a disjunction of atoms, or a
conjunction with one parenthesized disjunct.  Atoms name attributes; a
negated atom is only meaningful against a three-way compound, where it
evaluates through the complement block.  Descriptions carry enough
information to be rendered on their own and are re-checked against the
context they are evaluated on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from collections.abc import Iterable, Sequence

from granudesc._bits import bits, mask_of, set_of
from granudesc.context import CompoundContext, Flavor, FormalContext, ObjectSet
from granudesc.errors import FlavorMismatch, GranuleDescError


class Block(Enum):
    A = "a"
    B = "b"


@dataclass(frozen=True)
class Atom:
    block: Block
    index: int
    name: str
    negated: bool = False


@dataclass(frozen=True)
class Conj:
    """All atoms must hold."""

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", _canonical_atoms(self.atoms))


@dataclass(frozen=True)
class Disj:
    """At least one atom must hold; negation is not allowed here."""

    atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", _canonical_atoms(self.atoms))
        if any(a.negated for a in self.atoms):
            raise GranuleDescError("disjunctions take positive atoms only")


@dataclass(frozen=True)
class ConjDisj:
    """Conjunction of a-block atoms, and-ed with one b-block disjunct."""

    conj_atoms: tuple[Atom, ...]
    disj_atoms: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "conj_atoms", _canonical_atoms(self.conj_atoms))
        object.__setattr__(self, "disj_atoms", _canonical_atoms(self.disj_atoms))
        if any(a.negated for a in self.conj_atoms + self.disj_atoms):
            raise GranuleDescError("two-part descriptions take positive atoms only")
        if any(a.block is not Block.A for a in self.conj_atoms):
            raise GranuleDescError("the conjunctive part must use a-block atoms")
        if any(a.block is not Block.B for a in self.disj_atoms):
            raise GranuleDescError("the disjunctive part must use b-block atoms")


Description = Conj | Disj | ConjDisj


def _canonical_atoms(atoms: Sequence[Atom]) -> tuple[Atom, ...]:
    """Validate and sort atoms so equal descriptions compare equal."""
    if not atoms:
        raise GranuleDescError("a description needs at least one atom")
    seen = set()
    for a in atoms:
        key = (a.block, a.index, a.negated)
        if key in seen:
            raise GranuleDescError(f"duplicate atom {a.name!r}")
        seen.add(key)
    return tuple(sorted(atoms, key=lambda a: (a.negated, a.block.value, a.index)))


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------


def _plain_atoms(ctx: FormalContext, attrs: Iterable[int]) -> tuple[Atom, ...]:
    idx = sorted(set(attrs))
    for j in idx:
        if not 0 <= j < ctx.n_attributes:
            raise ValueError(f"attribute index {j} out of range")
    return tuple(Atom(Block.A, j, ctx.attributes[j]) for j in idx)


def conj_of(ctx: FormalContext, attrs: Iterable[int]) -> Conj:
    return Conj(_plain_atoms(ctx, attrs))


def disj_of(ctx: FormalContext, attrs: Iterable[int]) -> Disj:
    return Disj(_plain_atoms(ctx, attrs))


def three_way_conj(cctx: CompoundContext, flat_attrs: Iterable[int]) -> Conj:
    """Conjunction over flattened indices; the b-block half becomes negated atoms."""
    if cctx.flavor is not Flavor.THREE_WAY:
        raise FlavorMismatch("three_way_conj needs a three_way compound")
    n = len(cctx.a_attributes)
    atoms = []
    for j in sorted(set(flat_attrs)):
        if not 0 <= j < 2 * n:
            raise ValueError(f"flattened attribute index {j} out of range")
        if j < n:
            atoms.append(Atom(Block.A, j, cctx.a_attributes[j]))
        else:
            atoms.append(Atom(Block.A, j - n, cctx.a_attributes[j - n], negated=True))
    return Conj(tuple(atoms))


def conj_disj(
    cctx: CompoundContext, a_attrs: Iterable[int], b_attrs: Iterable[int]
) -> ConjDisj:
    if cctx.flavor is not Flavor.COMMON_NECESSARY:
        raise FlavorMismatch("conj_disj needs a common_necessary compound")
    return ConjDisj(
        tuple(
            Atom(Block.A, j, cctx.a_attributes[j]) for j in sorted(set(a_attrs))
        ),
        tuple(
            Atom(Block.B, j, cctx.b_attributes[j]) for j in sorted(set(b_attrs))
        ),
    )


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _atom_column(ctx: FormalContext | CompoundContext, atom: Atom) -> int:
    """Object mask of the atom, checking that it resolves in this context."""
    if isinstance(ctx, FormalContext):
        if atom.negated:
            raise GranuleDescError(
                f"negated atom {atom.name!r} needs a three-way compound"
            )
        if atom.block is not Block.A:
            raise GranuleDescError(f"atom {atom.name!r} names a missing block")
        names, cols = ctx.attributes, ctx.column_masks
    elif atom.block is Block.A:
        if atom.negated:
            if ctx.flavor is not Flavor.THREE_WAY:
                raise GranuleDescError(
                    f"negated atom {atom.name!r} needs a three-way compound"
                )
            # negated atoms keep the base attribute name; the column is the
            # paired complement column at the same index
            names, cols = ctx.a_attributes, ctx.b_block.column_masks
        else:
            names, cols = ctx.a_attributes, ctx.a_block.column_masks
    else:
        names, cols = ctx.b_attributes, ctx.b_block.column_masks
    if not 0 <= atom.index < len(names) or names[atom.index] != atom.name:
        raise GranuleDescError(f"atom {atom.name!r} does not resolve in this context")
    return cols[atom.index]


def evaluate(ctx: FormalContext | CompoundContext, d: Description) -> ObjectSet:
    """Objects satisfying the description."""
    full = (1 << ctx.n_objects) - 1
    if isinstance(d, Conj):
        m = full
        for a in d.atoms:
            m &= _atom_column(ctx, a)
        return set_of(m)
    if isinstance(d, Disj):
        m = 0
        for a in d.atoms:
            m |= _atom_column(ctx, a)
        return set_of(m)
    if isinstance(d, ConjDisj):
        if not isinstance(ctx, CompoundContext) or ctx.flavor is not Flavor.COMMON_NECESSARY:
            raise FlavorMismatch("a two-part description needs a common_necessary compound")
        m = full
        for a in d.conj_atoms:
            m &= _atom_column(ctx, a)
        dm = 0
        for a in d.disj_atoms:
            dm |= _atom_column(ctx, a)
        return set_of(m & dm)
    raise TypeError(f"not a description: {d!r}")


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------

_UNICODE_OPS = {"and": " ∧ ", "or": " ∨ ", "not": "¬"}
_ASCII_OPS = {"and": " & ", "or": " | ", "not": "!"}


def _sorted_atoms(atoms: Iterable[Atom]) -> list[Atom]:
    return sorted(atoms, key=lambda a: (a.negated, a.block.value, a.index))


def render(d: Description, ascii_ops: bool = False) -> str:
    """Deterministic text form; unicode connectives unless asked otherwise."""
    ops = _ASCII_OPS if ascii_ops else _UNICODE_OPS

    def atom_text(a: Atom) -> str:
        return (ops["not"] + a.name) if a.negated else a.name

    if isinstance(d, Conj):
        return ops["and"].join(atom_text(a) for a in _sorted_atoms(d.atoms))
    if isinstance(d, Disj):
        return ops["or"].join(atom_text(a) for a in _sorted_atoms(d.atoms))
    if isinstance(d, ConjDisj):
        conj = ops["and"].join(atom_text(a) for a in _sorted_atoms(d.conj_atoms))
        disj = ops["or"].join(atom_text(a) for a in _sorted_atoms(d.disj_atoms))
        return f"{conj}{ops['and']}({disj})"
    raise TypeError(f"not a description: {d!r}")


_TOKEN = re.compile(r"\s*(\(|\)|∧|∨|¬|&|\||!|[^\s()&|!∧∨¬]+)")


def _tokenize(text: str) -> list[str]:
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tokens.append(m.group(1))
        pos = m.end()
    if text[pos:].strip():
        raise GranuleDescError(f"cannot tokenize {text[pos:].strip()!r}")
    return tokens


def _resolve(ctx: FormalContext | CompoundContext, name: str, negated: bool) -> Atom:
    if isinstance(ctx, FormalContext):
        if negated:
            raise GranuleDescError("negation needs a three-way compound")
        try:
            return Atom(Block.A, ctx.attribute_index(name), name)
        except KeyError:
            raise GranuleDescError(f"unknown attribute {name!r}") from None
    if negated and ctx.flavor is not Flavor.THREE_WAY:
        raise GranuleDescError("negation needs a three-way compound")
    if name in ctx.a_attributes:
        return Atom(Block.A, ctx.a_attributes.index(name), name, negated=negated)
    if name in ctx.b_attributes:
        if negated:
            raise GranuleDescError(f"cannot negate complement attribute {name!r}")
        return Atom(Block.B, ctx.b_attributes.index(name), name)
    raise GranuleDescError(f"unknown attribute {name!r}")


def parse_description(text: str, ctx: FormalContext | CompoundContext) -> Description:
    """Parse one connective level: atoms joined by all-and or all-or, with
    an optional single parenthesized disjunct inside a conjunction."""
    tokens = _tokenize(text)
    if not tokens:
        raise GranuleDescError("empty description")

    # items: ("atom", Atom) or ("group", [Atom, ...]); ops: "and"/"or"
    items: list[tuple[str, object]] = []
    ops: list[str] = []
    expecting_term = True
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if expecting_term:
            negated = False
            while tok in ("¬", "!"):
                negated = True
                i += 1
                if i >= len(tokens):
                    raise GranuleDescError("dangling negation")
                tok = tokens[i]
            if tok == "(":
                depth_names: list[tuple[str, bool]] = []
                if negated:
                    raise GranuleDescError("cannot negate a group")
                i += 1
                expect_name = True
                while i < len(tokens) and tokens[i] != ")":
                    inner = tokens[i]
                    if expect_name:
                        neg = False
                        while inner in ("¬", "!"):
                            neg = True
                            i += 1
                            if i >= len(tokens):
                                raise GranuleDescError("dangling negation")
                            inner = tokens[i]
                        if inner in ("(", ")", "∧", "∨", "&", "|"):
                            raise GranuleDescError(f"expected a name, got {inner!r}")
                        depth_names.append((inner, neg))
                    else:
                        if inner not in ("∨", "|"):
                            raise GranuleDescError(
                                "a parenthesized group must be a disjunction"
                            )
                    expect_name = not expect_name
                    i += 1
                if i >= len(tokens):
                    raise GranuleDescError("unclosed parenthesis")
                if expect_name or not depth_names:
                    raise GranuleDescError("malformed parenthesized group")
                items.append(("group", depth_names))
            elif tok in (")", "∧", "∨", "&", "|"):
                raise GranuleDescError(f"expected a name, got {tok!r}")
            else:
                items.append(("atom", (tok, negated)))
            expecting_term = False
        else:
            if tok in ("∧", "&"):
                ops.append("and")
            elif tok in ("∨", "|"):
                ops.append("or")
            else:
                raise GranuleDescError(f"expected a connective, got {tok!r}")
            expecting_term = True
        i += 1
    if expecting_term:
        raise GranuleDescError("description ends with a connective")
    if ops and len(set(ops)) > 1:
        raise GranuleDescError("mixing ∧ and ∨ needs parentheses")

    groups = [it for it in items if it[0] == "group"]
    plain = [it[1] for it in items if it[0] == "atom"]
    if groups:
        if len(groups) > 1:
            raise GranuleDescError("at most one parenthesized group is allowed")
        if not plain or (ops and ops[0] != "and"):
            raise GranuleDescError("a parenthesized disjunct must sit in a conjunction")
        conj_atoms = tuple(_resolve(ctx, n, neg) for n, neg in plain)
        disj_atoms = tuple(_resolve(ctx, n, neg) for n, neg in groups[0][1])
        if not isinstance(ctx, CompoundContext) or ctx.flavor is not Flavor.COMMON_NECESSARY:
            raise GranuleDescError(
                "a conjunction with a disjunct needs a common_necessary compound"
            )
        return ConjDisj(conj_atoms, disj_atoms)
    atoms = tuple(_resolve(ctx, n, neg) for n, neg in plain)
    if ops and ops[0] == "or":
        return Disj(atoms)
    return Conj(atoms)
