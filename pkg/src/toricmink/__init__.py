"""Full Minkowski length of lattice polygons and toric surface code bounds."""

from .bounds import BoundReport, bound_report, threshold_exceptional, threshold_plain
from .code import (
    DistanceResult,
    EvaluationTable,
    build_table,
    count_zeros,
    expand_product,
    min_distance,
)
from .field import FieldSpec, make_field, torus_points
from .geometry import (
    LatticePolygon,
    UnimodularMap,
    apply_map,
    fits_translate,
    lattice_points,
    minkowski_sum,
    mixed_volume2,
    normalize,
    polygon,
    twice_area,
)
from .minkowski import (
    IndecomposableClass,
    MinkowskiWitness,
    SegmentMultiset,
    classify,
    enumerate_polygons,
    full_minkowski_length,
    has_exceptional_maximal,
    oracle_full_length,
)

__all__ = [
    "BoundReport", "DistanceResult", "EvaluationTable", "FieldSpec", "IndecomposableClass",
    "LatticePolygon", "MinkowskiWitness", "SegmentMultiset", "UnimodularMap", "apply_map",
    "bound_report", "build_table", "classify", "count_zeros", "enumerate_polygons",
    "expand_product", "fits_translate", "full_minkowski_length", "has_exceptional_maximal",
    "lattice_points", "make_field", "min_distance", "minkowski_sum", "mixed_volume2",
    "normalize", "oracle_full_length", "polygon", "threshold_exceptional", "threshold_plain",
    "torus_points", "twice_area",
]
