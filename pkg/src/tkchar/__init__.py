"""Character varieties of the groups <x, y | x^m = y^n>.

Exact component enumeration, incidence graph with exact attachment points,
explicit SU(2) representative matrices, and a randomized sampling oracle
that checks the closed-form structure numerically.
"""

from .components import (
    ComponentId,
    ComponentInfo,
    GroupParams,
    Irr,
    Red,
    attachment,
    count_irr,
    enumerate_irr,
    enumerate_red,
    joining_component,
    self_loops,
)
from .graph import IncidenceGraph, build_graph, is_connected, to_dot, to_json, to_svg_schematic
from .reps import (
    DEFAULT_WORDS,
    Word,
    build_irr,
    build_point,
    build_red_coprime,
    build_red_noncoprime,
    character,
    cross_ratio_of_pair,
    evaluate_word,
)
from .roots import ONE, MINUS_ONE, RootOfUnity, crt_attachment, root
from .su2 import (
    DEFAULT_TOL,
    DegenerateError,
    ProjectivePoint,
    SpecialLinearMatrix,
    UnitaryMatrix,
    commutator_trace,
    conjugate_by,
    cross_ratio,
    eigen_decompose,
    from_quaternion,
    is_reducible_pair,
    mat_pow,
    trace,
)
from .verify import (
    AmbiguousDecodeError,
    ClassifiedPoint,
    SampleConfig,
    canonical_red_angle,
    classify,
    empirical_structure,
    find_conjugator,
    sample_pair,
    summary_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousDecodeError",
    "ClassifiedPoint",
    "ComponentId",
    "ComponentInfo",
    "DEFAULT_TOL",
    "DEFAULT_WORDS",
    "DegenerateError",
    "GroupParams",
    "IncidenceGraph",
    "Irr",
    "MINUS_ONE",
    "ONE",
    "ProjectivePoint",
    "Red",
    "RootOfUnity",
    "SampleConfig",
    "SpecialLinearMatrix",
    "UnitaryMatrix",
    "Word",
    "attachment",
    "build_graph",
    "build_irr",
    "build_point",
    "build_red_coprime",
    "build_red_noncoprime",
    "canonical_red_angle",
    "character",
    "classify",
    "commutator_trace",
    "conjugate_by",
    "count_irr",
    "cross_ratio",
    "cross_ratio_of_pair",
    "crt_attachment",
    "eigen_decompose",
    "empirical_structure",
    "enumerate_irr",
    "enumerate_red",
    "evaluate_word",
    "find_conjugator",
    "from_quaternion",
    "is_connected",
    "is_reducible_pair",
    "joining_component",
    "mat_pow",
    "root",
    "sample_pair",
    "self_loops",
    "summary_to_json",
    "to_dot",
    "to_json",
    "to_svg_schematic",
    "trace",
]
