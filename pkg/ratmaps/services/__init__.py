from .rational_map import (
    ProjPoint,
    RationalMap,
    evaluate,
    is_strictly_cubic,
    normalize_map,
)
from .solving import SolutionSet, common_zeros
from .intersection import INFINITE, intersection_multiplicity
from .base_locus import (
    BaseLocus,
    BasePoint,
    base_locus,
    base_point_multiplicity,
    dehomogenize,
)
from .jacobian import JacobianDegeneracy, jacobian_degeneracy, jacobian_matrix
from .fibers import Fiber, TopologicalDegree, fiber_over, topological_degree
