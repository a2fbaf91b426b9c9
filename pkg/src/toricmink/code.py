"""Toric surface codes and their exact minimum distance.

The code of a polygon ``P`` over GF(q) evaluates every polynomial supported
on ``P`` at all points of the torus (F*)^2.  The minimum distance is the
block length minus the largest number of torus zeros of a nonzero such
polynomial, which :func:`min_distance` finds by exhaustive search.

Search layout: coefficient vectors are split into a prefix (first ``k``
monomials) and a suffix (remaining ``s``).  All ``q**s`` suffix codewords are
tabulated once.  For each scale-class representative of the prefix (first
nonzero coefficient equal to one) a row of the combined codeword vanishes
exactly where the suffix value equals minus the prefix value, so zero counts
for a whole block of classes come from one vectorized comparison.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .field import FieldSpec
from .geometry import LatticePolygon, Point

DEFAULT_BUDGET = 2 * 10**9
SUFFIX_TABLE_CELLS = 2**22


class PolygonOutsideBoxError(ValueError):
    """The polygon does not sit in ``[0, q-2]^2``."""


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, classes: int, rows: int, budget: int) -> None:
        self.classes = classes
        self.rows = rows
        self.budget = budget
        super().__init__(
            f"search needs {classes} scale classes x {rows} torus points = "
            f"{classes * rows} class-row products, above the budget of {budget}"
        )


def check_in_box(P: LatticePolygon, q: int) -> None:
    x0, y0, x1, y1 = P.bbox
    if x0 < 0 or y0 < 0 or x1 > q - 2 or y1 > q - 2:
        raise PolygonOutsideBoxError(
            f"polygon {list(P.vertices)} is not inside [0, {q - 2}]^2"
        )


@dataclass(frozen=True, eq=False)
class EvaluationTable:
    """Values of each monomial of ``P`` (columns) at each torus point (rows)."""

    field: FieldSpec
    monomials: tuple[Point, ...]
    values: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.monomials)

    @property
    def block_length(self) -> int:
        return self.values.shape[0]

    def evaluate(self, coeffs: Sequence[int]) -> np.ndarray:
        """Codeword of the polynomial with the given coefficients."""
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        F = self.field
        acc = np.zeros(self.block_length, dtype=self.values.dtype)
        for j, c in enumerate(coeffs):
            if c:
                acc = F.add_arr(acc, F.mul_arr(self.values[:, j], int(c)))
        return acc


def build_table(P: LatticePolygon, F: FieldSpec) -> EvaluationTable:
    q = F.q
    check_in_box(P, q)
    mons = P.points
    i = np.arange(q - 1)
    # row index r = i*(q-1) + j corresponds to the torus point (g^i, g^j)
    ii, jj = np.meshgrid(i, i, indexing="ij")
    ii, jj = ii.ravel(), jj.ravel()
    logs = np.stack([(ii * m1 + jj * m2) % (q - 1) for m1, m2 in mons], axis=1)
    return EvaluationTable(F, mons, F.exp[logs])


def count_zeros(T: EvaluationTable, coeffs: Sequence[int]) -> int:
    if not any(coeffs):
        raise ValueError("the zero polynomial vanishes everywhere")
    return int(np.count_nonzero(T.evaluate(coeffs) == 0))


def table_rank(T: EvaluationTable) -> int:
    """Rank of the evaluation matrix over GF(q), by Gaussian elimination."""
    F = T.field
    M = T.values.astype(np.int64).copy()
    rows, cols = M.shape
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if M[r, c]), None)
        if pivot is None:
            continue
        M[[rank, pivot]] = M[[pivot, rank]]
        inv = F.inv(int(M[rank, c]))
        M[rank] = F.mul_arr(M[rank], inv)
        for r in range(rows):
            if r != rank and M[r, c]:
                factor = F.neg(int(M[r, c]))
                M[r] = F.add_arr(M[r], F.mul_arr(M[rank], factor))
        rank += 1
    return rank


@dataclass(frozen=True)
class DistanceResult:
    q: int
    n: int
    block_length: int
    min_distance: int
    max_zeros: int
    witness: tuple[int, ...]
    elapsed_ms: int = 0
    worker_count: int = 1

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "block_length": self.block_length,
            "min_distance": self.min_distance,
            "max_zeros": self.max_zeros,
            "witness": list(self.witness),
            "elapsed_ms": self.elapsed_ms,
            "worker_count": self.worker_count,
        }


def scale_classes(q: int, n: int) -> int:
    return (q**n - 1) // (q - 1)


def _codeword_table(F: FieldSpec, cols: np.ndarray) -> np.ndarray:
    """Codewords of all ``q**m`` coefficient vectors over ``cols`` (rows x m).

    Result has shape ``(rows, q**m)``; vectors are in lexicographic order with
    the first coefficient most significant.
    """
    rows, m = cols.shape
    table = np.zeros((rows, 1), dtype=cols.dtype)
    for j in range(m - 1, -1, -1):
        # prepend coefficient j: new index = c * q**(len) + old index
        multiples = np.stack([F.mul_arr(cols[:, j], c) for c in range(F.q)], axis=1)
        table = F.add_arr(
            np.repeat(multiples, table.shape[1], axis=1), np.tile(table, (1, F.q))
        )
    return table


def _normalized_vectors(q: int, k: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of length ``k`` whose first nonzero entry is 1, in lex order."""
    out = []
    for lead in range(k - 1, -1, -1):
        for tail in itertools.product(range(q), repeat=k - 1 - lead):
            out.append((0,) * lead + (1,) + tail)
    return out


def _vector_at(index: int, q: int, m: int) -> tuple[int, ...]:
    ds = []
    for _ in range(m):
        index, r = divmod(index, q)
        ds.append(r)
    return tuple(reversed(ds))


@dataclass
class _Job:
    field: FieldSpec
    suffix: np.ndarray  # rows x q**s
    prefix_cols: np.ndarray  # rows x k
    prefixes: list = field(default_factory=list)
    s: int = 0


def _search(job: _Job) -> tuple[int, Optional[tuple[int, ...]]]:
    """Best ``(zeros, coefficient vector)`` over the job's prefixes.

    Ties keep the lexicographically smallest vector: prefixes arrive in lex
    order and ``argmax`` returns the first suffix index.
    """
    F = job.field
    best_z, best_v = -1, None
    S = job.suffix
    for pre in job.prefixes:
        if any(pre):
            val = np.zeros(S.shape[0], dtype=S.dtype)
            for j, c in enumerate(pre):
                if c:
                    val = F.add_arr(val, F.mul_arr(job.prefix_cols[:, j], c))
            zeros = np.count_nonzero(S == F.neg_table[val][:, None], axis=0)
        else:
            zeros = np.count_nonzero(S == 0, axis=0).astype(np.int64)
            # keep only normalized nonzero suffix vectors
            zeros[~_normalized_mask(F.q, job.s)] = -1
        idx = int(np.argmax(zeros))
        if zeros[idx] > best_z:
            best_z, best_v = int(zeros[idx]), tuple(pre) + _vector_at(idx, F.q, job.s)
    return best_z, best_v


def _normalized_mask(q: int, s: int) -> np.ndarray:
    mask = np.zeros(q**s, dtype=bool)
    for v in _normalized_vectors(q, s):
        mask[int(np.ravel_multi_index(v, (q,) * s))] = True
    return mask


def _split(q: int, n: int, rows: int) -> int:
    s = 1
    while s < n and q ** (s + 1) * rows <= SUFFIX_TABLE_CELLS:
        s += 1
    return s


def min_distance(
    T: EvaluationTable,
    workers: int = 1,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> DistanceResult:
    """Exact minimum distance by enumerating one vector per scale class.

    Pass ``budget=None`` to lift the size guard.  The class space is split
    into ``workers`` contiguous pieces; the result does not depend on it.
    """
    start = time.perf_counter()
    F, n, rows = T.field, T.n, T.block_length
    q = F.q
    classes = scale_classes(q, n)
    if budget is not None and classes * rows > budget:
        raise SearchBudgetExceeded(classes, rows, budget)
    workers = max(1, int(workers))

    s = _split(q, n, rows)
    k = n - s
    suffix = _codeword_table(F, T.values[:, k:])
    prefixes = [(0,) * k] + _normalized_vectors(q, k)
    size = -(-len(prefixes) // workers)
    chunks = [prefixes[i : i + size] for i in range(0, len(prefixes), size)]
    jobs = [_Job(F, suffix, T.values[:, :k], chunk, s) for chunk in chunks]

    if workers == 1 or len(jobs) == 1:
        results = [_search(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search, jobs))

    best_z, best_v = -1, None
    for z, v in results:
        if v is not None and (z > best_z or (z == best_z and v < best_v)):
            best_z, best_v = z, v
    elapsed = int((time.perf_counter() - start) * 1000)
    return DistanceResult(q, n, rows, rows - best_z, best_z, best_v, elapsed, workers)


def naive_min_distance(T: EvaluationTable) -> tuple[int, int]:
    """``(min_distance, max_zeros)`` by evaluating every nonzero vector directly."""
    best = 0
    for coeffs in itertools.product(range(T.field.q), repeat=T.n):
        if any(coeffs):
            best = max(best, count_zeros(T, coeffs))
    return T.block_length - best, best


Poly = dict[tuple[int, int], int]


def poly_mul(f: Poly, g: Poly, F: FieldSpec) -> Poly:
    out: Poly = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            m = (a1 + a2, b1 + b2)
            out[m] = F.add(out.get(m, 0), F.mul(c1, c2))
    return {m: c for m, c in out.items() if c}


def expand_product(factors: Sequence[Poly], T: EvaluationTable) -> list[int]:
    """Multiply sparse bivariate factors and return coefficients in table column order.

    Each factor maps exponent pairs ``(i, j)`` (for ``x^i y^j``) to field
    elements.
    """
    F = T.field
    prod: Poly = {(0, 0): 1}
    for f in factors:
        prod = poly_mul(prod, f, F)
    index = {m: i for i, m in enumerate(T.monomials)}
    escaped = sorted(m for m in prod if m not in index)
    if escaped:
        raise ValueError(f"product has monomials outside the polygon: {escaped}")
    coeffs = [0] * T.n
    for m, c in prod.items():
        coeffs[index[m]] = c
    return coeffs


def monomial(i: int, j: int, c: int = 1) -> Poly:
    return {(i, j): c}


def x_minus(a: int, F: FieldSpec) -> Poly:
    return {(1, 0): 1, (0, 0): F.neg(a)}


def y_minus(b: int, F: FieldSpec) -> Poly:
    return {(0, 1): 1, (0, 0): F.neg(b)}
