"""Exact character values for symmetric groups and p-vanishing classification.

Everything is integer arithmetic on partitions: no floats, no numerics.
The modules layer cleanly: partitions (combinatorics), padic (base-p
structure and singularity), characters (recursive evaluation), vanishing
(classification, audits, conjecture scans), verify (batch sweeps),
cli (command line).
"""

from . import characters as _characters
from . import padic as _padic
from . import partitions as _partitions
from . import vanishing as _vanishing
from .characters import (
    CharacterTable,
    centralizer_order,
    character_table,
    character_value,
    degree,
    factored_character_value,
    induced_character_value,
    merged_cycle_type,
    multi_character_value,
)
from .padic import (
    PAdicContext,
    SINGULARITY_METHODS,
    degree_valuation,
    digit_hook_lengths,
    is_blocked_at_level,
    is_p_adic_type,
    is_p_singular,
    p_adic_context,
    p_adic_type_witness,
    p_power_partition,
    valuation,
    weight_digit,
)
from .partitions import (
    HookRemoval,
    Partition,
    RDecomposition,
    as_partition,
    beta_set,
    can_remove_sequence,
    conjugate,
    enumerate_partitions,
    format_partition,
    from_beta_set,
    from_core_and_quotient,
    hook_length,
    hook_lengths,
    parse_partition,
    r_decompose,
    removable_hooks,
)
from .vanishing import (
    ConjectureScan,
    ConjectureSweep,
    StructureAudit,
    VanishEntry,
    VanishReport,
    audit_vanishing_structure,
    base_vanishing_table,
    check_conjectures,
    conjecture_sweep,
    is_p_vanishing_bruteforce,
    is_p_vanishing_structural,
    list_p_vanishing,
    structural_split,
    suffix_reduction_check,
    vanishing_flags,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Reset every memo table in the package (mainly for benchmarks and tests)."""
    _vanishing.clear_caches()
    _characters.clear_caches()
    _padic.p_adic_context.cache_clear()
    _partitions.clear_caches()


__all__ = [
    "CharacterTable",
    "ConjectureScan",
    "ConjectureSweep",
    "HookRemoval",
    "PAdicContext",
    "Partition",
    "RDecomposition",
    "SINGULARITY_METHODS",
    "StructureAudit",
    "VanishEntry",
    "VanishReport",
    "as_partition",
    "audit_vanishing_structure",
    "base_vanishing_table",
    "beta_set",
    "can_remove_sequence",
    "centralizer_order",
    "character_table",
    "character_value",
    "check_conjectures",
    "clear_caches",
    "conjecture_sweep",
    "conjugate",
    "degree",
    "degree_valuation",
    "digit_hook_lengths",
    "enumerate_partitions",
    "factored_character_value",
    "format_partition",
    "from_beta_set",
    "from_core_and_quotient",
    "hook_length",
    "hook_lengths",
    "induced_character_value",
    "is_blocked_at_level",
    "is_p_adic_type",
    "is_p_singular",
    "is_p_vanishing_bruteforce",
    "is_p_vanishing_structural",
    "list_p_vanishing",
    "merged_cycle_type",
    "multi_character_value",
    "p_adic_context",
    "p_adic_type_witness",
    "p_power_partition",
    "parse_partition",
    "r_decompose",
    "removable_hooks",
    "structural_split",
    "suffix_reduction_check",
    "valuation",
    "vanishing_flags",
    "weight_digit",
]
