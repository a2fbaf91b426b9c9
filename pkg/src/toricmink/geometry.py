"""Exact integer geometry of convex lattice polygons.

Points and vectors are plain ``(x, y)`` tuples of Python ints.  Areas are
always carried as *twice* the Euclidean area so that everything stays integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

Point = tuple[int, int]
Vector = tuple[int, int]

COORD_LIMIT = 2**20


class CoordinateRangeError(ValueError):
    """Raised when a coordinate leaves the supported range |x|, |y| <= 2**20."""


def cross(u: Vector, v: Vector) -> int:
    return u[0] * v[1] - u[1] * v[0]


def sub(p: Point, q: Point) -> Vector:
    return (p[0] - q[0], p[1] - q[1])


def add(p: Point, v: Vector) -> Point:
    return (p[0] + v[0], p[1] + v[1])


def is_primitive(v: Vector) -> bool:
    return math.gcd(v[0], v[1]) == 1


def canonical_direction(v: Vector) -> Vector:
    """Return ``v`` with the sign fixed so that dy > 0, or dy == 0 and dx > 0."""
    dx, dy = v
    if dx == 0 and dy == 0:
        raise ValueError("zero vector has no direction")
    if dy < 0 or (dy == 0 and dx < 0):
        return (-dx, -dy)
    return (dx, dy)


def primitive_direction(v: Vector) -> Vector:
    g = math.gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no direction")
    return canonical_direction((v[0] // g, v[1] // g))


def _check_range(points: Iterable[Point]) -> None:
    for x, y in points:
        if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
            raise CoordinateRangeError(f"coordinate out of range: {(x, y)}")


def _hull(points: Sequence[Point]) -> list[Point]:
    # Andrew's monotone chain, dropping collinear points.  Output is CCW
    # starting at the lexicographically smallest point.
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(sub(lower[-1], lower[-2]), sub(p, lower[-2])) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(sub(upper[-1], upper[-2]), sub(p, upper[-2])) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


@dataclass(frozen=True)
class LatticePolygon:
    """A convex lattice polygon in canonical form.

    ``vertices`` are distinct, strictly convex and counterclockwise, starting
    at the lexicographically smallest vertex.  Points (one vertex) and
    segments (two vertices) are allowed.  Build instances with
    :func:`normalize` rather than calling the constructor directly.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a polygon needs at least one vertex")

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @cached_property
    def edges(self) -> tuple[Vector, ...]:
        vs = self.vertices
        if len(vs) == 1:
            return ()
        return tuple(sub(vs[(i + 1) % len(vs)], vs[i]) for i in range(len(vs)))

    @cached_property
    def halfplanes(self) -> tuple[tuple[int, int, int], ...]:
        """Inequalities ``a*x + b*y <= c`` cutting out a 2-dimensional polygon."""
        vs = self.vertices
        out = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            a, b = v[1] - u[1], u[0] - v[0]
            out.append((a, b, a * u[0] + b * u[1]))
        return tuple(out)

    @cached_property
    def bbox(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def width(self) -> int:
        x0, _, x1, _ = self.bbox
        return x1 - x0

    @property
    def height(self) -> int:
        _, y0, _, y1 = self.bbox
        return y1 - y0

    @cached_property
    def points(self) -> tuple[Point, ...]:
        """All lattice points, ordered lexicographically by ``(y, x)``."""
        vs = self.vertices
        if len(vs) == 1:
            return vs
        if len(vs) == 2:
            (x0, y0), (x1, y1) = vs
            g = math.gcd(x1 - x0, y1 - y0)
            dx, dy = (x1 - x0) // g, (y1 - y0) // g
            return tuple(sorted(((x0 + k * dx, y0 + k * dy) for k in range(g + 1)),
                                key=lambda p: (p[1], p[0])))
        _, ymin, _, ymax = self.bbox
        out = []
        for y in range(ymin, ymax + 1):
            lo, hi = -math.inf, math.inf
            for a, b, c in self.halfplanes:
                rhs = c - b * y
                if a > 0:
                    hi = min(hi, rhs // a)
                elif a < 0:
                    lo = max(lo, -(rhs // -a))
                elif rhs < 0:
                    lo, hi = 1, 0
            if lo <= hi:
                out.extend((x, y) for x in range(int(lo), int(hi) + 1))
        return tuple(out)

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def contains(self, p: Point) -> bool:
        vs = self.vertices
        if len(vs) == 1:
            return p == vs[0]
        if len(vs) == 2:
            u, v = vs
            d, w = sub(v, u), sub(p, u)
            if cross(d, w) != 0:
                return False
            t = d[0] * w[0] + d[1] * w[1]
            return 0 <= t <= d[0] * d[0] + d[1] * d[1]
        x, y = p
        return all(a * x + b * y <= c for a, b, c in self.halfplanes)

    def translate(self, t: Vector) -> "LatticePolygon":
        return LatticePolygon(tuple(add(p, t) for p in self.vertices))

    def __repr__(self) -> str:
        return f"LatticePolygon({list(self.vertices)})"


def normalize(points: Iterable[Point]) -> LatticePolygon:
    """Convex hull of ``points`` in canonical CCW form."""
    pts = [(int(x), int(y)) for x, y in points]
    if not pts:
        raise ValueError("cannot normalize an empty point set")
    _check_range(pts)
    return LatticePolygon(tuple(_hull(pts)))


def polygon(*points: Point) -> LatticePolygon:
    """Shorthand for ``normalize(points)``."""
    return normalize(points)


def segment(v: Vector, start: Point = (0, 0)) -> LatticePolygon:
    return normalize([start, add(start, v)])


def twice_area(P: LatticePolygon) -> int:
    vs = P.vertices
    if len(vs) < 3:
        return 0
    return sum(cross(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def lattice_points(P: LatticePolygon) -> tuple[int, int, int]:
    """Return ``(total, interior, boundary)`` lattice point counts.

    Every lattice point of a point or a segment counts as a boundary point.
    """
    total = len(P.points)
    if P.dim < 2:
        return total, 0, total
    boundary = sum(math.gcd(dx, dy) for dx, dy in P.edges)
    return total, total - boundary, boundary


def _half(v: Vector) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _edges_from_bottom(P: LatticePolygon) -> tuple[Point, list[Vector]]:
    vs = P.vertices
    i0 = min(range(len(vs)), key=lambda i: (vs[i][1], vs[i][0]))
    es = P.edges
    return vs[i0], [es[(i0 + k) % len(es)] for k in range(len(es))]


def minkowski_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """Minkowski sum by merging the two edge sequences in angular order."""
    p0, ep = _edges_from_bottom(P)
    q0, eq = _edges_from_bottom(Q)
    cur = add(p0, q0)
    out = [cur]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if j == len(eq):
            e = ep[i]
            i += 1
        elif i == len(ep):
            e = eq[j]
            j += 1
        else:
            a, b = ep[i], eq[j]
            ha, hb = _half(a), _half(b)
            if ha < hb or (ha == hb and cross(a, b) > 0):
                e = a
                i += 1
            elif ha > hb or cross(a, b) < 0:
                e = b
                j += 1
            else:
                e = add(a, b)
                i += 1
                j += 1
        cur = add(cur, e)
        out.append(cur)
    return normalize(out)


def minkowski_sum_all(parts: Iterable[LatticePolygon]) -> LatticePolygon:
    acc = LatticePolygon(((0, 0),))
    for part in parts:
        acc = minkowski_sum(acc, part)
    return acc


def mixed_volume2(P: LatticePolygon, Q: LatticePolygon) -> int:
    """Twice the mixed area ``A(P+Q) - A(P) - A(Q)``."""
    return twice_area(minkowski_sum(P, Q)) - twice_area(P) - twice_area(Q)


def contains_polygon(P: LatticePolygon, Q: LatticePolygon, t: Vector = (0, 0)) -> bool:
    """Is ``t + Q`` a subset of ``P``?  Checking vertices suffices by convexity."""
    return all(P.contains(add(v, t)) for v in Q.vertices)


def fits_translate(Q: LatticePolygon, P: LatticePolygon) -> Optional[Vector]:
    """Lexicographically smallest lattice vector ``t`` with ``t + Q`` inside ``P``."""
    if Q.width > P.width or Q.height > P.height:
        return None
    v0 = Q.vertices[0]  # lexicographically least vertex
    others = Q.vertices[1:]
    for d in sorted(P.points):
        t = sub(d, v0)
        if all(P.contains(add(v, t)) for v in others):
            return t
    return None


@dataclass(frozen=True)
class UnimodularMap:
    """Affine map ``p -> M p + t`` with ``M = [[a, b], [c, d]]`` in GL(2, Z)."""

    a: int = 1
    b: int = 0
    c: int = 0
    d: int = 1
    tx: int = 0
    ty: int = 0

    def __post_init__(self) -> None:
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise ValueError(f"linear part {self.a, self.b, self.c, self.d} is not unimodular")

    def __call__(self, p: Point) -> Point:
        x, y = p
        return (self.a * x + self.b * y + self.tx, self.c * x + self.d * y + self.ty)

    def linear(self, v: Vector) -> Vector:
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)


def apply_map(M: UnimodularMap, P: LatticePolygon) -> LatticePolygon:
    return normalize(M(p) for p in P.vertices)
