"""widthlab: widths, width moments and width distributions of convex polytopes."""

__version__ = "0.1.0"

from .bodies import CanonicalBodyId, ReferenceMoment, make_body, reference_moment
from .distribution import (
    ECDF,
    HistogramDensity,
    WidthExtremes,
    WidthSampleSet,
    ecdf,
    histogram_density,
    sample_widths,
    width_extremes,
)
from .exceptions import ContractViolation, NotAvailableError, PolytopeFileError, QuadratureError
from .geometry import (
    Polytope,
    UnitDirection,
    WidthEvaluation,
    ball_union_chord,
    diameter,
    g_max,
    support,
    width,
    widths,
)
from .rng import DirectionStream, uniform_direction_stream
from .sphere import MomentEstimate, QuadratureGrid, build_grid, moment_monte_carlo, moment_quadrature
from .tetra_analytic import SectorReport, mean_square_width_analytic
