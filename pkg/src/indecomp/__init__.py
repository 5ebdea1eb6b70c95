"""Tools for interval decomposition of digraphs and critical-vertex analysis."""

from .core import (
    ABSENT,
    BACKWARD,
    CanonicalBoundError,
    DgFormatError,
    Digraph,
    DigraphError,
    FORWARD,
    MUTUAL,
    PairType,
    canonical_code,
    complement,
    dual,
    find_isomorphism,
    from_pair_types,
    homogeneous,
    induced,
    make_digraph,
    pair_type,
    pairs_equivalent,
    parse_dg,
    relabel,
    serialize_dg,
    to_dot,
)
from .modular import (
    SUBSET_ORACLE_BOUND,
    OutsidePartition,
    TheoremViolation,
    check_outside_rules,
    extend_by_two,
    is_indecomposable,
    is_interval,
    minimal_interval_containing,
    nontrivial_intervals,
    outside_partition,
    small_indecomposable_around,
)
from .criticality import (
    CriticalityReport,
    ShapeDescriptor,
    SupportResult,
    SymGraph,
    check_lemma21,
    critical_vertices,
    indecomposability_graph,
    make_symgraph,
    recognize_shape,
    shape_edges,
    support,
)
from .families import (
    FamilyMember,
    MAX_ENUM_ORDER,
    enum_class_F,
    enum_class_G,
    enum_class_Gdprime,
    enum_class_Gprime,
    enum_family_members,
    enum_Hstar_even,
    enum_Hstar_odd,
    gen_H,
    gen_Q5,
    gen_R,
    gen_T,
    gen_U,
    gen_V,
    verify_member_claims,
)
from .classifier import (
    CRITICAL,
    DECOMPOSABLE,
    MINUS_K_CRITICAL,
    MINUS_ONE_CRITICAL,
    OUT_OF_SCOPE_ORDER,
    THEOREM_VIOLATION,
    Classification,
    FamilyMatch,
    classify,
    match_family,
)
from .harness import (
    RoundtripReport,
    SurveyReport,
    roundtrip_check,
    survey_exhaustive,
    survey_random,
)

__all__ = [
    "ABSENT",
    "BACKWARD",
    "CRITICAL",
    "CanonicalBoundError",
    "Classification",
    "CriticalityReport",
    "DECOMPOSABLE",
    "DgFormatError",
    "Digraph",
    "DigraphError",
    "FORWARD",
    "FamilyMatch",
    "FamilyMember",
    "MAX_ENUM_ORDER",
    "MINUS_K_CRITICAL",
    "MINUS_ONE_CRITICAL",
    "MUTUAL",
    "OUT_OF_SCOPE_ORDER",
    "OutsidePartition",
    "PairType",
    "RoundtripReport",
    "SUBSET_ORACLE_BOUND",
    "ShapeDescriptor",
    "SupportResult",
    "SurveyReport",
    "SymGraph",
    "THEOREM_VIOLATION",
    "TheoremViolation",
    "canonical_code",
    "check_lemma21",
    "check_outside_rules",
    "classify",
    "complement",
    "critical_vertices",
    "dual",
    "enum_Hstar_even",
    "enum_Hstar_odd",
    "enum_class_F",
    "enum_class_G",
    "enum_class_Gdprime",
    "enum_class_Gprime",
    "enum_family_members",
    "extend_by_two",
    "find_isomorphism",
    "from_pair_types",
    "gen_H",
    "gen_Q5",
    "gen_R",
    "gen_T",
    "gen_U",
    "gen_V",
    "homogeneous",
    "indecomposability_graph",
    "induced",
    "is_indecomposable",
    "is_interval",
    "make_digraph",
    "make_symgraph",
    "match_family",
    "minimal_interval_containing",
    "nontrivial_intervals",
    "outside_partition",
    "pair_type",
    "pairs_equivalent",
    "parse_dg",
    "recognize_shape",
    "relabel",
    "roundtrip_check",
    "serialize_dg",
    "shape_edges",
    "small_indecomposable_around",
    "support",
    "survey_exhaustive",
    "survey_random",
    "to_dot",
    "verify_member_claims",
]
