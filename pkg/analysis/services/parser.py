"""
Text front end for maps and polynomials.

Grammar (whitespace is ignored)::

    map   := '[' poly ':' poly ':' poly ':' poly ']'
    poly  := ['-'] term (('+' | '-') term)*
    term  := factor (['*'] factor)*
    factor:= atom [('^' | '**') integer]
    atom  := variable | integer | integer '/' integer | '(' poly ')'

Source maps use x, y, z; surface equations use u, v, w, t.
"""

import logging
from fractions import Fraction

from lark import Lark, Token, Transformer, Tree, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from planarize.exceptions import MapParseError, PlanarizeError
from polys.services import LINE_COORDS, UVWT, XYZ, Poly

logger = logging.getLogger(__name__)

MAX_EXPONENT = 9
MAX_TERMS = 10_000
RINGS = (XYZ, UVWT, LINE_COORDS)
OPERATORS = '+-*/^'

grammar = r"""
    start: map | sum

    map: "[" sum ":" sum ":" sum ":" sum "]"

    ?sum: product
        | "-" product            -> neg
        | sum "+" product        -> add
        | sum "-" product        -> sub

    ?product: power
        | product "*" power      -> mul
        | product power          -> mul

    ?power: atom
        | atom POW INT           -> pow

    ?atom: NAME                  -> var
        | INT                    -> integer
        | INT "/" INT            -> rational
        | "(" sum ")"

    POW: "^" | "**"
    NAME: /[a-z][0-9]*/
    INT: /[0-9]+/

    %import common.WS
    %ignore WS
"""

parser = Lark(grammar, parser='lalr', propagate_positions=True)


@v_args(inline=True)
class PolyTransformer(Transformer):
    """Builds Poly values bottom-up, enforcing the exponent and size limits."""

    def __init__(self, ring):
        super().__init__()
        self.ring = ring

    def _checked(self, poly, position):
        if len(poly.terms) > MAX_TERMS:
            raise MapParseError(f"Expression expands to more than {MAX_TERMS} terms", position)
        return poly

    def var(self, token):
        return Poly.variable(self.ring, str(token))

    def integer(self, token):
        return Poly.constant(self.ring, int(token))

    def rational(self, numerator, denominator):
        if int(denominator) == 0:
            raise MapParseError("Zero denominator", denominator.start_pos)
        return Poly.constant(self.ring, Fraction(int(numerator), int(denominator)))

    def neg(self, value):
        return -value

    def add(self, left, right):
        return left + right

    def sub(self, left, right):
        return left - right

    def mul(self, left, right):
        return self._checked(left * right, None)

    def pow(self, base, operator, exponent):
        exponent_value = int(exponent)
        if exponent_value > MAX_EXPONENT:
            raise MapParseError(
                f"Exponent {exponent_value} is above the limit {MAX_EXPONENT}", exponent.start_pos
            )
        return self._checked(base ** exponent_value, operator.start_pos)

    def map(self, *components):
        return list(components)

    def start(self, value):
        return value


def _error_position(text, error):
    """
    Offset of the offending character. A dangling operator right before
    the place the parser stopped is reported instead.
    """
    if isinstance(error, UnexpectedCharacters):
        return error.pos_in_stream
    if isinstance(error, UnexpectedToken) and error.token.type != '$END':
        position = error.token.start_pos
    else:
        position = len(text)

    if position >= len(text) or text[position] in ']):':
        before = position - 1
        while before >= 0 and text[before].isspace():
            before -= 1
        if before >= 0 and text[before] in OPERATORS:
            return before
    return position


def _start_pos(node):
    if isinstance(node, Token):
        return node.start_pos
    if isinstance(node, Tree) and not node.meta.empty:
        return node.meta.start_pos
    return None


def _parse_tree(text):
    try:
        return parser.parse(text)
    except UnexpectedInput as e:
        position = _error_position(text, e)
        raise MapParseError("Syntax error", position) from e


def _choose_ring(tree, ring):
    names = sorted({str(t) for t in tree.scan_values(lambda v: isinstance(v, Token) and v.type == 'NAME')})
    if ring is not None:
        ring = tuple(ring)
        unknown = [n for n in names if n not in ring]
        if unknown:
            raise MapParseError(f"Variables {', '.join(unknown)} are not in {', '.join(ring)}")
        return ring
    for candidate in RINGS:
        if all(n in candidate for n in names):
            return candidate
    raise MapParseError(f"Mixed or unknown variables: {', '.join(names)}")


def _transform(tree, ring):
    try:
        return PolyTransformer(ring).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, PlanarizeError):
            raise e.orig_exc from None
        raise


def parse_poly(text, ring=None):
    """Parse one polynomial. Without ``ring`` the alphabet in use picks it."""
    tree = _parse_tree(text)
    body = tree.children[0]
    if isinstance(body, Tree) and body.data == 'map':
        raise MapParseError("Expected a polynomial, got a map", 0)
    return _transform(tree, _choose_ring(tree, ring))


def parse_map(text):
    """
    Parse ``[a : b : c : d]`` into a normalized RationalMap.

    Every component must be homogeneous in (x, y, z) and all nonzero
    components must share one degree.
    """
    from ratmaps.services import normalize_map

    tree = _parse_tree(text)
    body = tree.children[0]
    if not (isinstance(body, Tree) and body.data == 'map'):
        raise MapParseError("Expected a map '[a : b : c : d]'", 0)
    ring = _choose_ring(tree, None)
    if ring != XYZ:
        raise MapParseError("Source maps are written in x, y, z")
    components = _transform(tree, XYZ)

    degrees = set()
    for node, component in zip(body.children, components):
        if not component:
            continue
        if not component.is_homogeneous():
            raise MapParseError(f"Component {component} is not homogeneous", _start_pos(node))
        degrees.add(component.degree())
        if component.degree() == 0:
            raise MapParseError("Constant component in a map", _start_pos(node))
    if len(degrees) > 1:
        raise MapParseError(f"Components have different degrees {sorted(degrees)}", 0)
    try:
        return normalize_map(components)
    except PlanarizeError as e:
        raise MapParseError(str(e), 0) from e


def map_lines(text):
    """One map per non-empty line, skipping lines that start with '#'."""
    maps = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith('#'):
            maps.append(line)
    return maps
