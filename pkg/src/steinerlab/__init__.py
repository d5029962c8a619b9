"""steinerlab: exact planar Steiner trees at desk scale.

Enumerates combinatorial types, realizes them uniquely via the Melzak
construction, evaluates lengths through the Maxwell closed form, returns all
minimal trees within tolerance, and explores the ambiguous set (equal-length
walls) in configuration space.
"""

from .ambiguity import (
    AmbiguityReport,
    PathTrace,
    WallHit,
    codirection_check,
    find_wall,
    is_ambiguous,
    perturbation_experiment,
    trace_path,
)
from .errors import (
    BracketLost,
    DegenerateInput,
    DegeneratePath,
    LimitExceeded,
    NoConvergence,
    NotRealizable,
    NoWall,
    SteinerError,
)
from .geom import Arc, Point, angle_at, intersect_segment_arc, third_equilateral_point
from .length import (
    LengthFunction,
    MaxwellCoefficients,
    length_function,
    length_gradient,
    maxwell_coefficients,
    maxwell_length,
)
from .realization import (
    Configuration,
    RealizedTree,
    is_realizable,
    make_configuration,
    realize,
    realize_full,
)
from .solver import SolveResult, fermat_point, minimal_types, smith_relax, solve
from .topology import (
    CombinatorialType,
    FullComponentDecomposition,
    canonical_code,
    enumerate_full_types,
    enumerate_types,
    full_components,
    mirrored,
    orientation_variants,
)

__version__ = "0.1.0"
