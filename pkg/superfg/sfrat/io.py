import re
import tokenize
from fractions import Fraction
from typing import List

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from superfg.sfrat.laurent import LaurentPoly
from superfg.sfrat.sfrat import SFRat

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TRANSFORMS = standard_transformations + (convert_xor,)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for exps in sorted(p.terms, reverse=True):
        coeff = p.terms[exps]
        factors = [
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(p.variables, exps)
            if e != 0
        ]
        if not factors:
            terms.append(format_coefficient(coeff))
        elif coeff == 1:
            terms.append("*".join(factors))
        elif coeff == -1:
            terms.append("-" + "*".join(factors))
        else:
            terms.append("*".join([format_coefficient(coeff)] + factors))
    return " + ".join(terms)


def format_sfrat(f: SFRat) -> str:
    if f.den == 1:
        return format_poly(f.num)
    return f"({format_poly(f.num)}) / ({format_poly(f.den)})"


def parse_sfrat(text: str) -> SFRat:
    """Parse `(num) / (den)` term lists, e.g. `(1 + 3/2*x1^2*x2^-1) / (x2)`."""
    text = str(text).strip()
    if not text:
        raise ValueError(f"Empty SFRat string: {text=}")
    names = set(_IDENT.findall(text))
    local = {name: sympy.Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, tokenize.TokenError, sympy.SympifyError) as e:
        raise ValueError(f"Malformed SFRat string: {text=}") from e
    num, den = sympy.fraction(sympy.together(expr))
    return SFRat(LaurentPoly.from_sympy(num), LaurentPoly.from_sympy(den))


def parse_sfrat_list(texts: List[str]) -> List[SFRat]:
    return [parse_sfrat(t) for t in texts]


def to_sympy(f: SFRat):
    return f.num.to_sympy() / f.den.to_sympy()


def from_sympy(expr) -> SFRat:
    num, den = sympy.fraction(sympy.together(sympy.sympify(expr)))
    return SFRat(LaurentPoly.from_sympy(num), LaurentPoly.from_sympy(den))
