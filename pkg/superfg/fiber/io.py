import re
import tokenize
from typing import Any, Dict, List, Sequence

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from superfg.fiber.dataclasses import FiberCurve, LetterPoly, VerticalSystem
from superfg.fiber.elimination import from_sympy_expr
from superfg.seeds.io import read_json
from superfg.sfrat.io import format_sfrat, parse_sfrat

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TRANSFORMS = standard_transformations + (convert_xor,)


def parse_letter_poly(text: str, letters: Sequence[str]) -> LetterPoly:
    """'1 + (1+c)*u1 + u2^-1' -> {exponent vector: coefficient} over the given letters."""
    text = str(text).strip()
    local = {name: sympy.Symbol(name) for name in set(_IDENT.findall(text)) | set(letters)}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, tokenize.TokenError, sympy.SympifyError) as e:
        raise ValueError(f"Malformed Laurent relation: {text=}") from e
    return from_sympy_expr(expr, [local[name] for name in letters])


def parse_vertical_system(data: Dict[str, Any]) -> VerticalSystem:
    """{"letters": [...], "binomials": [[...]], "units": [...], "laurents": [...]}."""
    try:
        letters = [str(name) for name in data["letters"]]
        laurents = data["laurents"]
    except (KeyError, TypeError) as e:
        raise ValueError(f"Invalid vertical system: {e}") from e
    units = [parse_sfrat(str(u)) for u in data.get("units", [])]
    return VerticalSystem(
        letters,
        data.get("binomials", []),
        units,
        [parse_letter_poly(p, letters) for p in laurents],
    )


def read_vertical_system(filename: str) -> VerticalSystem:
    return parse_vertical_system(read_json(filename))


def parse_support(text) -> List[tuple]:
    """'0,0;3,0;0,3' or a list of pairs -> lattice points."""
    if isinstance(text, (list, tuple)):
        pairs = text
    else:
        pairs = [p.split(",") for p in str(text).replace(" ", "").split(";") if p]
    try:
        return [(int(a), int(b)) for a, b in pairs]
    except ValueError as e:
        raise ValueError(f"Invalid support points: {text!r}") from e


def format_letter_poly(p: LetterPoly, variables: Sequence[str]) -> str:
    terms = []
    for exps in sorted(p):
        factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exps) if e]
        coeff = format_sfrat(p[exps])
        if not factors:
            terms.append(coeff)
        elif p[exps].equals(1):
            terms.append("*".join(factors))
        else:
            terms.append("*".join([f"({coeff})"] + factors))
    return " + ".join(terms) if terms else "0"


def curve_to_json(curve: FiberCurve) -> Dict[str, Any]:
    out = {
        "variables": list(curve.variables),
        "P": format_letter_poly(curve.P, curve.variables),
        "terms": [[list(e), format_sfrat(c)] for e, c in sorted(curve.P.items())],
        "newton": [list(p) for p in curve.newton],
        "genus": curve.genus,
        "subtraction_free": curve.sf_flag,
    }
    if curve.letter_change is not None:
        out["smith_coordinates"] = curve.letter_change.smith_coordinates
    return out
