import pytest

from conftest import DELTA, EX1, EX2, EX3, SQUARE, random_polygon, random_unimodular
from toricmink.geometry import (
    UnimodularMap,
    apply_map,
    canonical_direction,
    contains_polygon,
    fits_translate,
    lattice_points,
    minkowski_sum,
    normalize,
    segment,
    sub,
    twice_area,
)
from toricmink.minkowski import (
    IndecomposableClass,
    SegmentMultiset,
    T0,
    classify,
    enumerate_polygons,
    full_minkowski_length,
    has_exceptional_maximal,
    max_multiple,
    oracle_full_length,
)

@pytest.fixture(scope="module")
def census():
    return {P: full_minkowski_length(P) for P in enumerate_polygons(3)}


def check_witness(P, L, w):
    assert w.length == L
    Q = w.polygon()
    assert contains_polygon(P, Q)
    assert fits_translate(Q.translate((-w.anchor[0], -w.anchor[1])), P) is not None


class TestFullLength:
    def test_point(self):
        L, w = full_minkowski_length(normalize([(3, 2)]))
        assert L == 0 and w.length == 0 and w.anchor == (3, 2)

    def test_primitive_segment(self):
        assert full_minkowski_length(segment((1, 0)))[0] == 1

    def test_long_segment(self):
        L, w = full_minkowski_length(segment((4, 2), (1, 1)))
        assert L == 2
        assert w.segments.entries == (((2, 1), 2),)

    def test_pentagon(self):
        L, w = full_minkowski_length(EX1)
        assert L == 3
        check_witness(EX1, L, w)

    def test_triple_unit_triangle(self):
        P = normalize([(0, 0), (3, 0), (0, 3)])
        assert oracle_full_length(P) == 3
        assert full_minkowski_length(P)[0] == 3

    def test_t0(self):
        assert full_minkowski_length(T0)[0] == 1

    def test_examples_two_and_three(self):
        assert full_minkowski_length(EX2)[0] == 3
        assert full_minkowski_length(EX3)[0] == 3

    def test_printed_pentagon_vertices_give_length_four(self):
        # the vertex list (0,0),(1,0),(1,3),(2,4),(4,2) disagrees with the stated invariants
        P = normalize([(0, 0), (1, 0), (1, 3), (2, 4), (4, 2)])
        assert twice_area(P) == 16
        assert full_minkowski_length(P)[0] == oracle_full_length(P) == 4

    def test_max_multiple(self):
        assert max_multiple(EX3, (1, 0)) == 2
        assert max_multiple(EX3, (1, 1)) == 2
        assert max_multiple(DELTA, (1, -1)) == 1

    def test_witness_is_deterministic(self):
        a = full_minkowski_length(EX3)[1]
        b = full_minkowski_length(normalize(reversed(EX3.vertices)))[1]
        assert a == b
        assert a.segments.entries == (((0, 1), 2), ((1, 0), 1))


class TestOracle:
    def test_unit_square(self):
        assert oracle_full_length(SQUARE) == 2

    def test_hexagon(self):
        assert oracle_full_length(EX3) == 3

    def test_rectangle(self):
        assert oracle_full_length(normalize([(0, 0), (1, 0), (1, 2), (0, 2)])) == 3

    def test_box_limit(self):
        with pytest.raises(ValueError):
            oracle_full_length(segment((9, 0)))


class TestClassify:
    def test_unit_triangle(self):
        assert classify(DELTA) is IndecomposableClass.UNIT_TRIANGLE

    def test_mapped_t0(self):
        M = UnimodularMap(1, 1, 0, 1, 2, 1)
        T = apply_map(M, T0)
        assert T == normalize([(3, 1), (3, 2), (6, 3)])
        assert lattice_points(T) == (4, 1, 3)
        assert classify(T) is IndecomposableClass.EXCEPTIONAL_TRIANGLE

    def test_square(self):
        assert classify(SQUARE) is IndecomposableClass.DECOMPOSABLE

    def test_degenerate(self):
        assert classify(normalize([(0, 0)])) is IndecomposableClass.POINT
        assert classify(segment((2, 3))) is IndecomposableClass.PRIMITIVE_SEGMENT
        assert classify(segment((2, 4))) is IndecomposableClass.DECOMPOSABLE

    def test_large_empty_triangle_is_not_exceptional(self):
        # twice-area 3 with a non-primitive edge has no interior point
        assert classify(normalize([(2, 1), (3, 1), (5, 4)])) is IndecomposableClass.DECOMPOSABLE


class TestExceptional:
    def test_pentagon(self):
        flag, w = has_exceptional_maximal(EX1, 3)
        assert flag
        check_witness(EX1, 3, w)
        assert classify(w.exceptional) is IndecomposableClass.EXCEPTIONAL_TRIANGLE
        (D,) = [p for p in w.exceptional.points if p not in w.exceptional.vertices]
        spokes = {canonical_direction(sub(v, D)) for v in w.exceptional.vertices}
        assert {v for v, _ in w.segments.entries} <= spokes

    def test_triangle(self):
        assert has_exceptional_maximal(EX2, 3) == (False, None)

    def test_hexagon(self):
        assert has_exceptional_maximal(EX3, 3) == (False, None)

    def test_trivial_cases(self):
        assert has_exceptional_maximal(normalize([(0, 0)]), 0) == (False, None)
        assert has_exceptional_maximal(segment((3, 0)), 3) == (False, None)

    def test_t0_itself(self):
        flag, w = has_exceptional_maximal(T0, 1)
        assert flag and w.polygon() == T0 and w.segments.total_count == 0


class TestCensus:
    def test_box_one(self):
        polys = list(enumerate_polygons(1))
        assert len(polys) == 10
        assert SQUARE in polys

    def test_box_three(self, census):
        assert len(census) == 1658
        assert T0 in census

    def test_deterministic_order(self):
        assert list(enumerate_polygons(2)) == list(enumerate_polygons(2))

    def test_limit(self):
        with pytest.raises(ValueError):
            next(enumerate_polygons(6))


class TestProperties:
    def test_witnesses_valid(self, census):
        for P, (L, w) in census.items():
            check_witness(P, L, w)

    def test_superadditive(self, rng):
        for _ in range(60):
            P, Q = random_polygon(rng, 2, 5), random_polygon(rng, 2, 5)
            L = full_minkowski_length(minkowski_sum(P, Q))[0]
            assert full_minkowski_length(P)[0] + full_minkowski_length(Q)[0] <= L

    def test_agl_invariance(self, rng):
        for _ in range(60):
            P = random_polygon(rng, 4)
            M = random_unimodular(rng)
            assert full_minkowski_length(apply_map(M, P))[0] == full_minkowski_length(P)[0]

    def test_segment_multiset(self):
        s = SegmentMultiset.from_directions([(0, -1), (1, 0), (0, 1)])
        assert s.entries == (((0, 1), 2), ((1, 0), 1))
        assert s.total_count == 3
        assert s.zonotope() == normalize([(0, 0), (1, 0), (1, 2), (0, 2)])
