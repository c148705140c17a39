"""Exact tools for Hilbert functions of artinian level and Gorenstein algebras.

The package computes with Macaulay inverse systems over a prime field:
h-vectors of modules generated by forms, growth bounds and interval
calculators for level and Gorenstein h-vectors, and replayable certificate
scans over candidate families.
"""

from levellab.bounds import (
    gorenstein_middle_interval,
    gorenstein_socle4_interval,
    level_quotient_floor,
    level_quotient_floor_ceil,
    max_prefix_type_range,
    max_prefix_vector,
    min_prev_entry,
    prev_entry_range,
    si_interval_closure,
    socle2_min_codim,
    socle2_type_range,
    socle3_interval,
    socle3_interval_low,
    socle3_step_applies,
    type2_quotient_floor,
    type_interval,
    type_reduction_applies,
)
from levellab.classify import (
    Budget,
    Certificate,
    Classification,
    Status,
    build_recipe,
    candidate_recipes,
    classify,
    expected_h_for_recipe,
    recipe_tag,
)
from levellab.constructions import (
    add_new_variable_power,
    augment_with_powers,
    compressed_generic_module,
    expected_h_augment,
    expected_h_compressed,
    expected_h_powers_partition,
    expected_h_sum_of_powers,
    greedy_partition,
    maximal_profile,
    powers_partition_module,
    realize_socle2,
    realize_socle3_partition,
    sum_of_powers,
)
from levellab.errors import (
    DependentGeneratorsError,
    HypothesisError,
    LevelLabError,
    ParseError,
    SoundnessError,
    VerificationError,
)
from levellab.forms import DEFAULT_PRIME, Form, format_form, parse_form
from levellab.macaulay import (
    BinomialExpansion,
    GrowthViolation,
    HVector,
    binomial,
    binomial_expansion,
    first_difference,
    is_admissible,
    is_o_sequence,
    is_si_sequence,
    macaulay_upper_bound,
    o_sequence_violation,
    shift_expansion,
)
from levellab.modules import (
    HProfile,
    InverseModule,
    common_derivative_dims,
    generic_subquotient,
    h_vector,
    is_gorenstein,
    is_level_presentation,
    module_from_text,
    module_to_text,
    truncate_level,
)
from levellab.scans import Gap, ScanReport, find_gaps, scan_gic, scan_ic
from levellab.seeds import derive_seed
from levellab.store import (
    record_from_classification,
    store_append,
    store_load,
    store_verify,
    verify_store_file,
)

__all__ = [
    "BinomialExpansion",
    "Budget",
    "Certificate",
    "Classification",
    "DEFAULT_PRIME",
    "DependentGeneratorsError",
    "Form",
    "Gap",
    "GrowthViolation",
    "HProfile",
    "HVector",
    "HypothesisError",
    "InverseModule",
    "LevelLabError",
    "ParseError",
    "ScanReport",
    "SoundnessError",
    "Status",
    "VerificationError",
    "add_new_variable_power",
    "augment_with_powers",
    "binomial",
    "binomial_expansion",
    "build_recipe",
    "candidate_recipes",
    "classify",
    "common_derivative_dims",
    "compressed_generic_module",
    "derive_seed",
    "expected_h_augment",
    "expected_h_compressed",
    "expected_h_for_recipe",
    "expected_h_powers_partition",
    "expected_h_sum_of_powers",
    "find_gaps",
    "first_difference",
    "format_form",
    "generic_subquotient",
    "gorenstein_middle_interval",
    "gorenstein_socle4_interval",
    "greedy_partition",
    "h_vector",
    "is_admissible",
    "is_gorenstein",
    "is_level_presentation",
    "is_o_sequence",
    "is_si_sequence",
    "level_quotient_floor",
    "level_quotient_floor_ceil",
    "macaulay_upper_bound",
    "max_prefix_type_range",
    "max_prefix_vector",
    "maximal_profile",
    "min_prev_entry",
    "module_from_text",
    "module_to_text",
    "o_sequence_violation",
    "parse_form",
    "powers_partition_module",
    "prev_entry_range",
    "realize_socle2",
    "realize_socle3_partition",
    "recipe_tag",
    "record_from_classification",
    "scan_gic",
    "scan_ic",
    "shift_expansion",
    "si_interval_closure",
    "socle2_min_codim",
    "socle2_type_range",
    "socle3_interval",
    "socle3_interval_low",
    "socle3_step_applies",
    "store_append",
    "store_load",
    "store_verify",
    "sum_of_powers",
    "truncate_level",
    "type2_quotient_floor",
    "type_interval",
    "type_reduction_applies",
    "verify_store_file",
]

__version__ = "0.1.0"
