from .parser import MAX_EXPONENT, MAX_TERMS, map_lines, parse_map, parse_poly
