"""Minimum-distance lower bounds for toric surface codes from ``L(P)``.

Two bounds apply once ``q`` is large enough:

* general case:   d >= (q-1)^2 - L(q-1) - floor(2 sqrt q) + 1
  for q >= max(23, (c + sqrt(c^2 + 5/2))^2),  c = A/2 - L + 9/4
* no exceptional triangle in any maximal decomposition:
                  d >= (q-1)^2 - L(q-1)
  for q >= max(37, (c + sqrt(c^2 + 2))^2),    c = A/2 - L + 11/4

All threshold comparisons are done in integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .code import check_in_box
from .field import is_prime_power, prime_power
from .geometry import LatticePolygon, lattice_points, twice_area
from .minkowski import full_minkowski_length, has_exceptional_maximal

EXCEPTIONAL_FLOOR = 23
PLAIN_FLOOR = 37

# Thresholds established by hand for individual polygons, keyed by vertices.
SHARPENED_THRESHOLDS: dict[tuple, int] = {
    ((0, 0), (4, 2), (2, 4), (1, 3), (0, 1)): 19,
    ((0, 0), (4, 1), (1, 4)): 37,
    ((0, 1), (1, 0), (2, 0), (3, 2), (3, 3), (1, 2)): 11,
}


class NotPrimePowerError(ValueError):
    pass


def exceptional_predicate(twice_area: int, L: int, q: int) -> bool:
    """Does ``sqrt(q) >= c + sqrt(c^2 + 5/2)`` hold, with ``c = A/2 - L + 9/4``?

    With ``N = 4c = 2A - 4L + 9``: subtracting c and squaring (both sides are
    nonnegative once sqrt(q) >= c) reduces it to ``q - 5/2 >= 2c sqrt(q)``,
    i.e. ``2q - 5 >= N sqrt(q)``.  For N <= 0 that holds whenever 2q >= 5;
    otherwise both sides are positive and squaring again is exact.
    """
    N = twice_area - 4 * L + 9
    if 2 * q < 5:
        return False
    if N <= 0:
        return True
    return (2 * q - 5) ** 2 >= N * N * q


def plain_predicate(twice_area: int, L: int, q: int) -> bool:
    """``sqrt(q) >= c + sqrt(c^2 + 2)`` with ``c = A/2 - L + 11/4``.

    Same reduction as above with ``N = 2A - 4L + 11``: ``2(q - 2) >= N sqrt(q)``.
    """
    N = twice_area - 4 * L + 11
    if q < 2:
        return False
    if N <= 0:
        return True
    return 4 * (q - 2) ** 2 >= N * N * q


def _least(pred, floor: int, hi: int) -> int:
    # pred is monotone on [floor, inf) and true at hi
    if pred(floor):
        return floor
    lo = floor  # pred(lo) is false
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def threshold_exceptional(twice_area: int, L: int) -> int:
    """Least q0 >= 23 from which the general bound is guaranteed."""
    N = max(twice_area - 4 * L + 9, 0)
    return _least(lambda q: exceptional_predicate(twice_area, L, q), EXCEPTIONAL_FLOOR,
                  max(EXCEPTIONAL_FLOOR, N * N + 5))


def threshold_plain(twice_area: int, L: int) -> int:
    """Least q0 >= 37 from which the bound without the sqrt(q) term is guaranteed."""
    N = max(twice_area - 4 * L + 11, 0)
    return _least(lambda q: plain_predicate(twice_area, L, q), PLAIN_FLOOR,
                  max(PLAIN_FLOOR, N * N + 4))


def next_prime_power(n: int) -> int:
    while not is_prime_power(n):
        n += 1
    return n


def bound_exceptional(q: int, L: int) -> int:
    return (q - 1) ** 2 - L * (q - 1) - math.isqrt(4 * q) + 1


def bound_plain(q: int, L: int) -> int:
    return (q - 1) ** 2 - L * (q - 1)


@dataclass(frozen=True)
class BoundReport:
    q: int
    block_length: int
    dimension: int
    L: int
    twice_area: int
    exceptional_case: bool
    threshold_q: int
    bound_valid_at_q: bool
    d_lower: int
    sharpened_threshold: Optional[int] = None

    @property
    def branch(self) -> int:
        """1 for the general bound, 2 for the exceptional-free bound."""
        return 1 if self.exceptional_case else 2

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "block_length": self.block_length,
            "dimension": self.dimension,
            "L": self.L,
            "twice_area": self.twice_area,
            "exceptional_case": self.exceptional_case,
            "branch": self.branch,
            "threshold_q": self.threshold_q,
            "bound_valid_at_q": self.bound_valid_at_q,
            "d_lower": self.d_lower,
            "sharpened_threshold": self.sharpened_threshold,
        }


def bound_report(P: LatticePolygon, q: int) -> BoundReport:
    if prime_power(q) is None:
        raise NotPrimePowerError(f"{q} is not a prime power")
    check_in_box(P, q)
    L, _ = full_minkowski_length(P)
    exceptional, _ = has_exceptional_maximal(P, L)
    ta = twice_area(P)
    if exceptional:
        threshold = threshold_exceptional(ta, L)
        d_lower = bound_exceptional(q, L)
    else:
        threshold = threshold_plain(ta, L)
        d_lower = bound_plain(q, L)
    threshold = next_prime_power(threshold)
    return BoundReport(
        q=q,
        block_length=(q - 1) ** 2,
        dimension=lattice_points(P)[0],
        L=L,
        twice_area=ta,
        exceptional_case=exceptional,
        threshold_q=threshold,
        bound_valid_at_q=q >= threshold,
        d_lower=d_lower,
        sharpened_threshold=SHARPENED_THRESHOLDS.get(P.vertices),
    )
