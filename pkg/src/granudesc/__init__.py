"""Definability and logical descriptions of object sets in binary tables.

The package decides whether a set of objects (a granule) of an
object-attribute table can be described exactly by a conjunction, by a
conjunction with negated attributes, by a disjunction, or by a
conjunction and-ed with a disjunct over a second attribute block; it
synthesizes the describing formula when one exists and computes the
tightest definable bounds when none does.
"""

from granudesc._kernel import backend_name
from granudesc.approximation import (
    Approximation,
    CoverProblem,
    Direction,
    Mode,
    enumerate_minimal_covers,
    lower_three_way,
    lower_vee,
    lower_wedge,
    upper_cn,
    upper_three_way,
    upper_vee,
    upper_wedge,
)
from granudesc.context import (
    AttributeSet,
    CompoundContext,
    Flavor,
    FormalContext,
    ObjectSet,
    appose_negation,
    complement_context,
    make_cn_context,
    parse_compound,
    parse_context,
    serialize_compound,
    serialize_context,
)
from granudesc.definability import (
    Reason,
    Status,
    Verdict,
    find_covering_elements,
    intersect_descriptions,
    is_cn_definable,
    is_three_way_definable,
    is_vee_definable,
    is_vee_definable_via_complement,
    is_wedge_definable,
    minimal_descriptions,
    union_vee_descriptions,
)
from granudesc.derivation import (
    CnIntent,
    cn_extent,
    cn_intent,
    compound_extent,
    compound_intent,
    extent,
    intent,
    necessity,
    possibility,
)
from granudesc.errors import (
    ContextFormatError,
    FlavorMismatch,
    GranuleDescError,
    Inapplicable,
    SizeGuardExceeded,
)
from granudesc.formula import (
    Atom,
    Block,
    Conj,
    ConjDisj,
    Description,
    Disj,
    conj_disj,
    conj_of,
    disj_of,
    evaluate,
    parse_description,
    render,
    three_way_conj,
)
from granudesc.lattice import (
    Concept,
    ConceptLattice,
    System,
    concept_join,
    concept_leq,
    concept_meet,
    enumerate_cn,
    enumerate_formal,
    enumerate_object_oriented,
    enumerate_three_way,
    lattice_to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "Approximation",
    "Atom",
    "AttributeSet",
    "Block",
    "CompoundContext",
    "Concept",
    "ConceptLattice",
    "Conj",
    "ConjDisj",
    "ContextFormatError",
    "CoverProblem",
    "CnIntent",
    "Description",
    "Direction",
    "Disj",
    "Flavor",
    "FlavorMismatch",
    "FormalContext",
    "GranuleDescError",
    "Inapplicable",
    "Mode",
    "ObjectSet",
    "Reason",
    "SizeGuardExceeded",
    "Status",
    "System",
    "Verdict",
    "appose_negation",
    "backend_name",
    "cn_extent",
    "cn_intent",
    "complement_context",
    "compound_extent",
    "compound_intent",
    "concept_join",
    "concept_leq",
    "concept_meet",
    "conj_disj",
    "conj_of",
    "disj_of",
    "enumerate_cn",
    "enumerate_formal",
    "enumerate_minimal_covers",
    "enumerate_object_oriented",
    "enumerate_three_way",
    "evaluate",
    "extent",
    "find_covering_elements",
    "intent",
    "intersect_descriptions",
    "is_cn_definable",
    "is_three_way_definable",
    "is_vee_definable",
    "is_vee_definable_via_complement",
    "is_wedge_definable",
    "lattice_to_dot",
    "lower_three_way",
    "lower_vee",
    "lower_wedge",
    "make_cn_context",
    "minimal_descriptions",
    "necessity",
    "parse_compound",
    "parse_context",
    "parse_description",
    "possibility",
    "render",
    "serialize_compound",
    "serialize_context",
    "three_way_conj",
    "union_vee_descriptions",
    "upper_cn",
    "upper_three_way",
    "upper_vee",
    "upper_wedge",
]
