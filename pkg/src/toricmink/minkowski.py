"""Full Minkowski length of lattice polygons.

The main routine searches zonotopes built from a unimodular frame
``{v1, v2, v1 + v2}`` anchored at lattice points of the polygon.  A second,
much slower search over arbitrary multisets of primitive segments serves as an
independent oracle for testing.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .geometry import (
    LatticePolygon,
    Vector,
    add,
    canonical_direction,
    cross,
    fits_translate,
    lattice_points,
    minkowski_sum,
    minkowski_sum_all,
    normalize,
    segment,
    sub,
)

ORACLE_MAX_BOX = 8
CENSUS_MAX_BOX = 5

# Exceptional triangle with interior point (1, 1).
T0 = normalize([(1, 0), (0, 1), (2, 2)])
UNIT_TRIANGLE = normalize([(0, 0), (1, 0), (0, 1)])


@dataclass(frozen=True)
class SegmentMultiset:
    """Primitive lattice directions with multiplicities, kept sorted."""

    entries: tuple[tuple[Vector, int], ...] = ()

    @classmethod
    def from_directions(cls, directions) -> "SegmentMultiset":
        counts = Counter(canonical_direction(v) for v in directions)
        return cls(tuple(sorted((v, m) for v, m in counts.items() if m > 0)))

    @property
    def total_count(self) -> int:
        return sum(m for _, m in self.entries)

    def directions(self) -> list[Vector]:
        """Directions repeated by multiplicity, in sorted order."""
        return [v for v, m in self.entries for _ in range(m)]

    def zonotope(self) -> LatticePolygon:
        return minkowski_sum_all(segment(v) for v in self.directions())


@dataclass(frozen=True)
class MinkowskiWitness:
    """A maximal decomposition found inside a polygon.

    The summands are the optional exceptional triangle and the segments
    ``[0, v]``; their Minkowski sum shifted by ``anchor`` lies in the polygon.
    """

    exceptional: Optional[LatticePolygon]
    segments: SegmentMultiset
    anchor: Vector

    @property
    def length(self) -> int:
        return self.segments.total_count + (self.exceptional is not None)

    def summands(self) -> list[LatticePolygon]:
        parts = [self.exceptional] if self.exceptional is not None else []
        return parts + [segment(v) for v in self.segments.directions()]

    def polygon(self) -> LatticePolygon:
        """The decomposed subpolygon, placed where it sits inside ``P``."""
        return minkowski_sum_all(self.summands()).translate(self.anchor)

    def sort_key(self):
        ex = self.exceptional.vertices if self.exceptional is not None else ()
        return (self.exceptional is not None, self.segments.directions(), ex, self.anchor)


class IndecomposableClass(enum.Enum):
    POINT = "Point"
    PRIMITIVE_SEGMENT = "PrimitiveSegment"
    UNIT_TRIANGLE = "UnitTriangle"
    EXCEPTIONAL_TRIANGLE = "ExceptionalTriangle"
    DECOMPOSABLE = "Decomposable"


def max_multiple(P: LatticePolygon, v: Vector) -> int:
    """Largest ``M`` such that a lattice translate of ``M*[0, v]`` fits in ``P``.

    Equal to the largest number of lattice points of ``P`` on one line with
    direction ``v``, minus one.
    """
    lines = Counter(cross(v, p) for p in P.points)
    return max(lines.values()) - 1


class _FitCache:
    def __init__(self, P: LatticePolygon) -> None:
        self.P = P
        self._cache: dict[SegmentMultiset, Optional[Vector]] = {}

    def anchor(self, segs: SegmentMultiset) -> Optional[Vector]:
        if segs not in self._cache:
            self._cache[segs] = fits_translate(segs.zonotope(), self.P)
        return self._cache[segs]


def unimodular_frames(P: LatticePolygon) -> list[tuple[Vector, Vector, Vector]]:
    """Distinct direction frames ``(v1, v2, v1 + v2)`` from triples of lattice points.

    A triple ``{A, B, C}`` has ``A`` as the common endpoint and ``B, C``
    unordered; it qualifies when ``[A, B]`` and ``[A, C]`` span a parallelogram
    of area one.  Frames that differ only by anchor point give the same
    zonotopes up to translation, so they are deduplicated.
    """
    pts = P.points
    seen: set[frozenset[Vector]] = set()
    frames = []
    for A in pts:
        for B, C in itertools.combinations(pts, 2):
            v1, v2 = sub(B, A), sub(C, A)
            if abs(cross(v1, v2)) != 1:
                continue
            frame = tuple(canonical_direction(v) for v in (v1, v2, add(v1, v2)))
            key = frozenset(frame)
            if key not in seen:
                seen.add(key)
                frames.append(frame)
    return frames


def _zonotope_witness(P: LatticePolygon) -> MinkowskiWitness:
    fits = _FitCache(P)
    best_len = 0
    best: Optional[MinkowskiWitness] = None
    multiples: dict[Vector, int] = {}
    for frame in unimodular_frames(P):
        bounds = [multiples.setdefault(v, max_multiple(P, v)) for v in frame]
        if sum(bounds) < best_len:
            continue
        for m1 in range(bounds[0] + 1):
            for m2 in range(bounds[1] + 1):
                if m1 + m2 + bounds[2] < best_len:
                    continue
                for m3 in range(max(0, best_len - m1 - m2), bounds[2] + 1):
                    segs = SegmentMultiset.from_directions(
                        [frame[0]] * m1 + [frame[1]] * m2 + [frame[2]] * m3
                    )
                    t = fits.anchor(segs)
                    if t is None:
                        # larger m3 cannot fit either
                        break
                    total = m1 + m2 + m3
                    w = MinkowskiWitness(None, segs, t)
                    if best is None or total > best_len or w.sort_key() < best.sort_key():
                        best_len, best = total, w
    assert best is not None
    return best


def full_minkowski_length(P: LatticePolygon) -> tuple[int, MinkowskiWitness]:
    """Full Minkowski length ``L(P)`` together with a maximal zonotope witness."""
    if P.dim == 0:
        return 0, MinkowskiWitness(None, SegmentMultiset(), P.vertices[0])
    if P.dim == 1:
        u, v = P.vertices
        d = sub(v, u)
        g = math.gcd(*d)
        segs = SegmentMultiset.from_directions([(d[0] // g, d[1] // g)] * g)
        return g, MinkowskiWitness(None, segs, fits_translate(segs.zonotope(), P))
    w = _zonotope_witness(P)
    return w.length, w


def classify(P: LatticePolygon) -> IndecomposableClass:
    total, interior, _ = lattice_points(P)
    if P.dim == 0:
        return IndecomposableClass.POINT
    if P.dim == 1:
        if total == 2:
            return IndecomposableClass.PRIMITIVE_SEGMENT
        return IndecomposableClass.DECOMPOSABLE
    if len(P.vertices) == 3:
        if total == 3:
            return IndecomposableClass.UNIT_TRIANGLE
        if total == 4 and interior == 1:
            return IndecomposableClass.EXCEPTIONAL_TRIANGLE
    return IndecomposableClass.DECOMPOSABLE


def is_exceptional_triangle(P: LatticePolygon) -> bool:
    return classify(P) is IndecomposableClass.EXCEPTIONAL_TRIANGLE


def _exceptional_triangles(P: LatticePolygon):
    """Exceptional triangles inside ``P`` up to translation, with interior point.

    A lattice triangle has exactly four lattice points with one inside iff
    its twice-area is 3 and all three edges are primitive.
    """
    seen = set()
    for A, B, C in itertools.combinations(P.points, 3):
        if abs(cross(sub(B, A), sub(C, A))) != 3:
            continue
        if any(math.gcd(*sub(u, v)) != 1 for u, v in ((A, B), (B, C), (C, A))):
            continue
        T = normalize([A, B, C])
        base = T.vertices[0]
        T = T.translate((-base[0], -base[1]))
        if T in seen:
            continue
        seen.add(T)
        (D,) = [p for p in T.points if p not in T.vertices]
        yield T, D


def has_exceptional_maximal(
    P: LatticePolygon, L: int
) -> tuple[bool, Optional[MinkowskiWitness]]:
    """Does some maximal decomposition in ``P`` contain an exceptional triangle?

    Every exceptional triangle ``T`` in ``P`` is tried together with the three
    segments joining its interior point to its vertices, with multiplicities
    summing to ``L - 1``.
    """
    if L < 1 or P.dim < 2:
        return False, None
    best: Optional[MinkowskiWitness] = None
    for T, D in _exceptional_triangles(P):
        spokes = [canonical_direction(sub(v, D)) for v in T.vertices]
        for m1 in range(L):
            for m2 in range(L - m1):
                m3 = L - 1 - m1 - m2
                segs = SegmentMultiset.from_directions(
                    [spokes[0]] * m1 + [spokes[1]] * m2 + [spokes[2]] * m3
                )
                t = fits_translate(minkowski_sum(T, segs.zonotope()), P)
                if t is None:
                    continue
                w = MinkowskiWitness(T, segs, t)
                if best is None or w.sort_key() < best.sort_key():
                    best = w
    return best is not None, best


def _primitive_directions(width: int, height: int) -> list[Vector]:
    out = []
    for dy in range(height + 1):
        for dx in range(-width, width + 1):
            if (dx, dy) != (0, 0) and math.gcd(dx, dy) == 1:
                if dy > 0 or dx > 0:
                    out.append((dx, dy))
    return out


def oracle_full_length(P: LatticePolygon) -> int:
    """Brute-force ``L(P)``: the most primitive segments whose sum fits in ``P``.

    Searches multisets of primitive directions in nondecreasing order,
    extending only sums that still fit, so every fitting zonotope is visited
    once.  Exponential; limited to polygons inside an 8x8 box.
    """
    if P.width > ORACLE_MAX_BOX or P.height > ORACLE_MAX_BOX:
        raise ValueError(f"oracle limited to {ORACLE_MAX_BOX}x{ORACLE_MAX_BOX} boxes")
    if P.dim == 0:
        return 0
    dirs = []
    caps = []
    for v in _primitive_directions(P.width, P.height):
        cap = 0
        Z = segment(v)
        while fits_translate(Z, P) is not None:
            cap += 1
            Z = minkowski_sum(Z, segment(v))
        if cap:
            dirs.append(v)
            caps.append(cap)

    best = 0

    def extend(start: int, Z: LatticePolygon, used: list[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        for i in range(start, len(dirs)):
            if used[i] == caps[i]:
                continue
            Z2 = minkowski_sum(Z, segment(dirs[i]))
            if fits_translate(Z2, P) is None:
                continue
            used[i] += 1
            extend(i, Z2, used, count + 1)
            used[i] -= 1

    extend(0, normalize([(0, 0)]), [0] * len(dirs), 0)
    return best


def enumerate_polygons(box: int) -> Iterator[LatticePolygon]:
    """All convex lattice polygons with vertices in ``[0, box]^2`` up to translation.

    Each translation class is represented by the member touching both axes.
    Output is sorted by vertex tuple.
    """
    if box > CENSUS_MAX_BOX:
        raise ValueError(f"census limited to box <= {CENSUS_MAX_BOX}")
    if box < 0:
        raise ValueError("box must be nonnegative")
    grid = [(x, y) for x in range(box + 1) for y in range(box + 1)]
    found: list[tuple] = []

    def grow(start: int, chosen: list) -> None:
        # chosen is a set of points in strictly convex position
        if chosen:
            xs = [p[0] for p in chosen]
            ys = [p[1] for p in chosen]
            if min(xs) == 0 and min(ys) == 0:
                found.append(tuple(chosen))
        for i in range(start, len(grid)):
            cand = chosen + [grid[i]]
            if len(normalize(cand).vertices) == len(cand):
                grow(i + 1, cand)

    grow(0, [])
    polys = sorted((normalize(vs) for vs in found), key=lambda P: P.vertices)
    yield from polys
