"""Newton polygon of a two-variable Laurent polynomial and the genus it controls."""
import logging
from math import gcd
from typing import Iterable, List, Mapping, Union

from superfg.fiber.dataclasses import NewtonReport, Point2

logger = logging.getLogger(__name__)


def cross(o: Point2, a: Point2, b: Point2) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point2]) -> List[Point2]:
    """Vertices in counterclockwise order, collinear boundary points dropped."""
    points = sorted(set((int(p[0]), int(p[1])) for p in points))
    if len(points) <= 2:
        return points

    lower: List[Point2] = []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point2] = []
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def double_area(polygon: List[Point2]) -> int:
    n = len(polygon)
    return abs(sum(
        polygon[i][0] * polygon[(i + 1) % n][1] - polygon[(i + 1) % n][0] * polygon[i][1]
        for i in range(n)
    ))


def boundary_count(polygon: List[Point2]) -> int:
    n = len(polygon)
    if n == 1:
        return 1
    if n == 2:
        (x0, y0), (x1, y1) = polygon
        return gcd(abs(x1 - x0), abs(y1 - y0)) + 1
    return sum(
        gcd(abs(polygon[(i + 1) % n][0] - polygon[i][0]), abs(polygon[(i + 1) % n][1] - polygon[i][1]))
        for i in range(n)
    )


def interior_count(polygon: List[Point2]) -> int:
    """Lattice points strictly inside a counterclockwise polygon, by scanning its bounding box."""
    if len(polygon) < 3:
        return 0
    xs = [p[0] for p in polygon]
    ys = [p[1] for p in polygon]
    edges = list(zip(polygon, polygon[1:] + polygon[:1]))
    count = 0
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            if all(cross(a, b, (x, y)) > 0 for a, b in edges):
                count += 1
    return count


def newton_genus(P: Union[Mapping[Point2, object], Iterable[Point2]]) -> NewtonReport:
    points = list(P.keys()) if isinstance(P, Mapping) else list(P)
    if not points:
        raise ValueError("Newton polygon of the zero polynomial")
    polygon = convex_hull(points)
    area2 = double_area(polygon) if len(polygon) >= 3 else 0
    B = boundary_count(polygon)
    I = interior_count(polygon)
    # Pick: A = I + B/2 - 1; a segment or point has no interior and nothing to check
    pick = 2 * I == area2 - B + 2 if len(polygon) >= 3 else True
    if not pick:
        logger.warning("Pick's theorem fails on %s: I=%d, 2A=%d, B=%d", polygon, I, area2, B)
    logger.debug("Newton polygon %s: interior %d, boundary %d", polygon, I, B)
    return NewtonReport(polygon, I, B, area2, pick)
