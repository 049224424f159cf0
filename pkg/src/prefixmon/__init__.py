"""Computational tools for prefix monoids of groups and right units of
special inverse monoids: words, presentations, Stallings automata, normal
forms, Munn trees, presentation transformers, Green's relation checks, and
bounded semidecision procedures.
"""

from .words import (
    Alphabet,
    Letter,
    Word,
    WordError,
    empty_word,
    free_reduce,
    invert,
    is_reduced,
    prefixes,
    translate,
    word_from_text,
    word_to_text,
)
from .presentations import (
    ParseError,
    Presentation,
    PresentationKind,
    parse_presentation,
    serialize_presentation,
    tietze_substitute,
    validate,
)
from .stallings import (
    SubgroupAutomaton,
    basis,
    build_subgroup,
    canonical_form,
    conjugate,
    contains,
    intersect,
    rank,
)
from .normal_forms import (
    Answer,
    CyclicGroupOracle,
    FreeGroupOracle,
    FreeProductNF,
    FreeProductOracle,
    GroupOracle,
    HnnOracle,
    HnnWord,
    OracleUndecided,
    cyclic_group_oracle,
    fp_equal,
    fp_normal_form,
    free_group_oracle,
    free_product,
    hnn_is_trivial,
    hnn_reduce,
)
from .munn import MunnTree, fim_equal, fim_is_idempotent, munn_tree
from .constructions import (
    GeneratorReport,
    add_free_generator,
    build_e_word,
    build_mqw,
    group_case_restriction,
    hnn_identity_extension,
    monoid_to_group,
    prefix_generators,
    ru_generators,
    special_inverse_of_rc,
    special_inverse_of_rc_relations,
    star_construction,
    star_prefix_generators,
)
from .greens import (
    AmbientSubmonoid,
    Ball,
    GreensReport,
    ball,
    compute_ball,
    greens_class_check,
    h_class_in_ball,
    is_right_unit_in_ball,
    right_stabilizer_in_ball,
    schutz_free_ambient,
    unit_generators_in_ball,
)
from .semidecide import (
    DovetailResult,
    Outcome,
    RcCloseTask,
    RewriteTask,
    SchutzMembershipTask,
    SemidecisionTask,
    brute_force_equal,
    dovetail_run,
    rc_close,
    schutz_membership_semidecide,
)

__version__ = "0.1.0"
