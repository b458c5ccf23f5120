from .field import (
    QuadExtScalar,
    Rational,
    field_ops,
    format_scalar,
    make_scalar,
    scalar_disc,
    common_disc,
    sqrt_in_field,
    to_scalar,
)

__all__ = [
    'QuadExtScalar',
    'Rational',
    'field_ops',
    'format_scalar',
    'make_scalar',
    'scalar_disc',
    'common_disc',
    'sqrt_in_field',
    'to_scalar',
]
