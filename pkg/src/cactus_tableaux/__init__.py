"""Exact combinatorics of tableaux under cactus and Bender-Knuth-type actions.

The package provides Young tableaux and Gelfand-Tsetlin patterns, jeu de
taquin sliding with promotion and evacuation, word-based group actions
with relation checkers, and the character-theoretic decomposition of the
hook-shape tableau modules, all in exact integer arithmetic.
"""

from .shapes import (
    Composition,
    Interval,
    Partition,
    Permutation,
    conjugate,
    enumerate_partitions,
    is_hook,
)
from .tableaux import (
    Tableau,
    Tabloid,
    content,
    dual_reflect,
    enumerate_ssyt,
    enumerate_syt,
    enumerate_tabloids,
    restrict_entries,
)
from .sliding import (
    bounded_promotion,
    evacuation,
    interval_evacuation,
    jdt_all_rectifications,
    jdt_rectify,
    partial_evacuation,
    promotion,
)
from .gt_patterns import (
    GTPattern,
    Strip,
    StripRectangle,
    bk_tau,
    from_pattern,
    strip_decomposition,
    strip_location,
    strip_swap,
    to_pattern,
)
from .group_actions import (
    BKWord,
    CactusWord,
    RelationReport,
    act,
    bk_act,
    cactus_act,
    chi_translate,
    generated_group_order,
    generator_permutation,
    parse_bk_word,
    parse_cactus_word,
    parse_word,
    pi_ij_image,
    pi_k_image,
    relation_report,
    star_relation_expected,
    word_perm,
)
from .representation import (
    CharacterValueTable,
    HookShape,
    MultiplicityVector,
    character_table,
    decompose_schutzenberger,
    delta_eigenspace_dims,
    fold_map,
    hook_length_dim,
    kostka_number,
    kostka_vector,
    mn_character,
    verify_fold_equivariance,
    verify_main_theorem,
    verify_two_one_case,
)
from .verify import RunConfig, Summary, batch_verify

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Interval",
    "Partition",
    "Permutation",
    "conjugate",
    "enumerate_partitions",
    "is_hook",
    "Tableau",
    "Tabloid",
    "content",
    "dual_reflect",
    "enumerate_ssyt",
    "enumerate_syt",
    "enumerate_tabloids",
    "restrict_entries",
    "bounded_promotion",
    "evacuation",
    "interval_evacuation",
    "jdt_all_rectifications",
    "jdt_rectify",
    "partial_evacuation",
    "promotion",
    "GTPattern",
    "Strip",
    "StripRectangle",
    "bk_tau",
    "from_pattern",
    "strip_decomposition",
    "strip_location",
    "strip_swap",
    "to_pattern",
    "BKWord",
    "CactusWord",
    "RelationReport",
    "act",
    "bk_act",
    "cactus_act",
    "chi_translate",
    "generated_group_order",
    "generator_permutation",
    "parse_bk_word",
    "parse_cactus_word",
    "parse_word",
    "pi_ij_image",
    "pi_k_image",
    "relation_report",
    "star_relation_expected",
    "word_perm",
    "CharacterValueTable",
    "HookShape",
    "MultiplicityVector",
    "character_table",
    "decompose_schutzenberger",
    "delta_eigenspace_dims",
    "fold_map",
    "hook_length_dim",
    "kostka_number",
    "kostka_vector",
    "mn_character",
    "verify_fold_equivariance",
    "verify_main_theorem",
    "verify_two_one_case",
    "RunConfig",
    "Summary",
    "batch_verify",
]
