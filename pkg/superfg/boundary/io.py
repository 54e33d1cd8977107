from typing import Any, Dict, List

from superfg.boundary.dataclasses import BoundaryMatrix
from superfg.boundary.matrix import transport
from superfg.seeds.io import read_json
from superfg.sfrat.io import format_sfrat, parse_sfrat


def _parse_entry(x):
    return parse_sfrat(str(x))


def parse_boundary_matrix(data: Dict[str, Any]) -> BoundaryMatrix:
    """Either explicit row-major "matrix" entries, or "r", "f" and "moves" out of C_star.

    Move column labels in files are 1-based.
    """
    if "matrix" in data:
        rows = [[_parse_entry(x) for x in row] for row in data["matrix"]]
        C = BoundaryMatrix.from_rows(rows)
    else:
        try:
            C = BoundaryMatrix.normalized(int(data["r"]), int(data["f"]))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid boundary matrix data: {e}") from e
    moves = [(int(a) - 1, int(b) - 1, _parse_entry(g)) for a, b, g in data.get("moves", [])]
    return transport(C, moves)


def read_boundary_matrix(filename: str) -> BoundaryMatrix:
    return parse_boundary_matrix(read_json(filename))


def boundary_matrix_to_json(C: BoundaryMatrix) -> Dict[str, List[List[str]]]:
    return {"matrix": [[format_sfrat(x) for x in row] for row in C.entries]}


def parse_labels(text) -> List[int]:
    """'1,2,4' (1-based) -> [0, 1, 3]."""
    if isinstance(text, (list, tuple)):
        items = text
    else:
        items = [t for t in str(text).replace(" ", "").split(",") if t]
    try:
        return [int(t) - 1 for t in items]
    except ValueError as e:
        raise ValueError(f"Invalid column labels: {text!r}") from e
