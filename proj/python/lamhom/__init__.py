"""Effective elastic, thermal and diffusive properties of periodic
thermodiffusive laminates, with closed-form homogenized solutions and a
heterogeneous reference solver."""

from ._lamhom import (  # noqa: F401
    HarmonicLoad,
    Laminate,
    PhaseProperties,
    dimensionless_ratios,
    effective_constants,
    laminate_from_json,
    macro_fields,
    make_isotropic_phase,
    normalized_constants,
    oracle_discrepancy,
    run_comparison,
)
