"""Finite left braces: constructions, star series, identities, structure
theorems and Yang-Baxter checks."""

from ._bracelab import (
    AxiomError,
    Brace,
    ResourceError,
    StructuralError,
    UsageError,
    a2_check,
    canonical_data,
    classify,
    d12_quotient,
    d13_brace,
    dumps,
    enumerate_ideals,
    epi,
    find_generators,
    generated_subbrace,
    identities,
    is_ideal,
    is_left_ideal,
    left_series,
    load_brace,
    quotient,
    r_map,
    right_series,
    run_cli,
    save_brace,
    smok_class,
    star_center,
    trivial_brace,
    upper_central_series,
    verify,
    ybe,
    zl,
)

__all__ = [name for name in dir() if not name.startswith("_")]
