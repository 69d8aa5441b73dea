"""Exact Betti numbers of moduli of real bundles over a real curve.

Thin wrapper over the C++ engine; all arithmetic is exact (arbitrary-precision
integers end to end).
"""

from realbetti._core import (
    EngineError,
    brute_force_partition_count,
    classical_group_series,
    codimension,
    compute,
    enumerate_real_types,
    enumerate_unstable_types,
    gauge_classifying_series,
    golden_sections,
    loop_group_series,
    low_rank_moduli_closed_form,
    quaternionic_admissible,
    quaternionic_to_real,
    real_refinement_count,
    semistable_series,
    verify_identity,
)

__all__ = [
    "EngineError",
    "brute_force_partition_count",
    "classical_group_series",
    "codimension",
    "compute",
    "enumerate_real_types",
    "enumerate_unstable_types",
    "gauge_classifying_series",
    "golden_sections",
    "loop_group_series",
    "low_rank_moduli_closed_form",
    "quaternionic_admissible",
    "quaternionic_to_real",
    "real_refinement_count",
    "semistable_series",
    "verify_identity",
]
