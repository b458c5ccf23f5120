from .lines import (
    LineAnalysis,
    concrete_restriction_matrix,
    line_points,
    line_restriction_matrix,
    plane_of_line,
    residual_conic,
)
from .planarity import (
    COTRIVIAL,
    DUAL_QUADRATIC,
    NOT_A_PLANARIZATION,
    QUADRATIC,
    TRIVIAL,
    UNCLASSIFIED,
    is_planarization,
    is_trivial,
    main_theorem_class,
    planarity_polynomial,
)
from .dual import Cotriviality, DualMap, cotriviality, dual_map, dual_system, is_cotrivial
from .implicit import DMAX, SurfaceModel, implicitize
from .checks import DegreeFormula, degree_formula_check, double_dual_check
