"""
Domain errors of the planarize toolkit.

Every error carries a stable ``code`` that the analysis report stores
instead of letting the exception escape.
"""


class PlanarizeError(Exception):
    """Base class for toolkit errors."""

    code = 'PLANARIZE_ERROR'

    def as_dict(self):
        return {'error': self.code, 'message': str(self)}


class IncompatibleFieldError(PlanarizeError):
    """Operands live in different quadratic extensions."""
    code = 'INCOMPATIBLE_FIELD'


class RingMismatchError(PlanarizeError):
    code = 'RING_MISMATCH'


class NonHomogeneousError(PlanarizeError):
    code = 'NON_HOMOGENEOUS'


class DimensionMismatchError(PlanarizeError):
    code = 'DIMENSION_MISMATCH'


class EliminationError(PlanarizeError):
    """Resultant requested with respect to a variable an input does not use."""
    code = 'ELIMINATION_ERROR'


class DegenerateKernel(PlanarizeError):
    code = 'DEGENERATE_KERNEL'


class NoKernel(PlanarizeError):
    code = 'NO_KERNEL'


class UnsupportedDegree(PlanarizeError):
    code = 'UNSUPPORTED_DEGREE'


class NotABasePoint(PlanarizeError):
    code = 'NOT_A_BASE_POINT'


class NotASurfaceImage(PlanarizeError):
    code = 'NOT_A_SURFACE_IMAGE'


class ImageSpansLine(PlanarizeError):
    """A generic line is sent into a line, so the dual map is not defined."""
    code = 'IMAGE_SPANS_LINE'


class DegreeBoundExceeded(PlanarizeError):
    code = 'DEGREE_BOUND_EXCEEDED'

    def __init__(self, dmax):
        super().__init__(f"No annihilating form of degree <= {dmax}")
        self.dmax = dmax


class IncompleteCheck(PlanarizeError):
    """A check could not be completed; ``partial`` keeps what was computed."""
    code = 'INCOMPLETE_CHECK'

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial or {}

    def as_dict(self):
        data = super().as_dict()
        data['partial'] = self.partial
        return data


class InvalidWitness(PlanarizeError):
    code = 'INVALID_WITNESS'


class NotAQuadricImageMap(PlanarizeError):
    code = 'NOT_A_QUADRIC_IMAGE_MAP'


class MapParseError(PlanarizeError):
    code = 'PARSE_ERROR'

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (offset {position})"
        super().__init__(message)
        self.position = position

    def as_dict(self):
        data = super().as_dict()
        data['position'] = self.position
        return data
