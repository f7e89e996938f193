"""Singularity classification, point conditions, intersection numbers and genus counts."""

import pytest

from algebra.poly import HomogeneousPoly
from algebra.primefield import PrimeField
from algebra.rings import QQ_FIELD

from curves.conditions import build_condition_rows, linear_system_dimension, proportional
from curves.genus import genus_deficit, line_components_through, line_divides, tangent_lines
from curves.intersection import (
    InfiniteIntersectionError,
    common_points,
    intersection_multiplicity,
    intersection_table,
    scan_points,
)
from curves.irreducibility import joining_line
from curves.local import classify_singularity, multiplicity_at
from curves.specs import ClusterSpec, MissingTangentError, PointSpec, SingularityKind, SingularitySpec

ORIGIN = (0, 0, 1)
Y_AXIS = (0, 1, 0)


def form(ring, terms):
    return HomogeneousPoly(ring, terms)


def cusp(ring):
    return form(ring, {(0, 2, 1): 1, (3, 0, 0): -1})


def node(ring):
    return form(ring, {(0, 2, 1): 1, (2, 0, 1): -1, (3, 0, 0): -1})


def tacnode(ring):
    return form(ring, {(0, 2, 2): 1, (4, 0, 0): -1})


def triple(ring):
    return form(ring, {(0, 3, 3): 1, (6, 0, 0): -1})


# classification


@pytest.mark.parametrize(
    "build, label",
    [
        (cusp, "cusp"),
        (node, "Ordinary(2)"),
        (tacnode, "tacnode"),
        (triple, "infinitely-near-triple"),
        (lambda r: form(r, {(4, 0, 0): 1, (0, 4, 0): -1}), "Ordinary(4)"),
        (lambda r: form(r, {(5, 0, 0): 1, (0, 5, 0): -1}), "outside-taxonomy"),
    ],
)
def test_classification_at_origin(build, label):
    assert classify_singularity(build(QQ_FIELD), ORIGIN).label == label


def test_cusp_tangent_is_reported():
    report = classify_singularity(cusp(QQ_FIELD), ORIGIN)
    tangent = [QQ_FIELD.decode(c) for c in report.tangent]
    assert tangent[0] == 0 and tangent[2] == 0 and tangent[1] != 0
    assert report.infinitely_near_multiplicity == 1


def test_tacnode_is_ordinary_after_one_blowup():
    report = classify_singularity(tacnode(QQ_FIELD), ORIGIN)
    assert report.ordinary_after_blowup is True


def test_smooth_and_absent_points():
    conic = form(QQ_FIELD, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
    assert classify_singularity(conic, (0, 1, 1)).kind == SingularityKind.SIMPLE
    assert classify_singularity(conic, (1, 1, 1)).kind == SingularityKind.NOT_ON_CURVE
    assert multiplicity_at(conic, (1, 1, 1)) == 0


# conditions


def test_cusp_conditions_hold_on_the_cusp_only():
    spec = SingularitySpec(SingularityKind.CUSP, PointSpec(ORIGIN), Y_AXIS)
    matrix = build_condition_rows(3, [spec], QQ_FIELD)
    assert matrix.shape == (5, 10)
    assert matrix.satisfied_by(cusp(QQ_FIELD))
    assert not matrix.satisfied_by(node(QQ_FIELD))


def test_tacnode_conditions():
    spec = SingularitySpec(SingularityKind.TACNODE, PointSpec(ORIGIN), Y_AXIS)
    matrix = build_condition_rows(4, [spec], QQ_FIELD)
    assert len(matrix.rows) == spec.row_count == 6
    assert matrix.satisfied_by(tacnode(QQ_FIELD))


def test_conic_through_five_points_is_unique():
    points = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
    specs = [SingularitySpec(SingularityKind.SIMPLE, PointSpec(p)) for p in points]
    assert linear_system_dimension(2, specs, QQ_FIELD) == 0


def test_ordinary_triple_point_on_quartics():
    spec = SingularitySpec(SingularityKind.ORDINARY, PointSpec(ORIGIN), multiplicity=3)
    assert linear_system_dimension(4, [spec], QQ_FIELD) == 8


def test_specs_reject_missing_tangents():
    with pytest.raises(MissingTangentError):
        SingularitySpec(SingularityKind.TACNODE, PointSpec(ORIGIN))
    with pytest.raises(MissingTangentError):
        ClusterSpec(PointSpec(ORIGIN), (2, 2))


def test_cluster_proximity():
    with pytest.raises(ValueError):
        ClusterSpec(PointSpec(ORIGIN), (2, 3), Y_AXIS)


def test_proportional():
    F = node(QQ_FIELD)
    assert proportional(F, F.scale(QQ_FIELD(3))) == 3
    assert proportional(F, cusp(QQ_FIELD)) is None


# intersections


@pytest.fixture
def gf13():
    return PrimeField(13)


def test_common_points_match_scan(gf13):
    F = form(gf13, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
    G = form(gf13, {(1, 1, 1): 1, (0, 0, 3): -2, (3, 0, 0): 1})
    points, _ = common_points(F, G)
    assert points == scan_points(F, G)
    report = intersection_table(F, G)
    assert report.total + report.nonrational_degree == 6


def test_tangent_line_meets_conic_twice(gf13):
    conic = form(gf13, {(0, 1, 1): 1, (2, 0, 0): -1})
    line = HomogeneousPoly.linear(gf13, Y_AXIS)
    report = intersection_table(conic, line)
    assert [(e.point, e.multiplicity) for e in report.entries] == [([0, 0, 1], 2)]
    assert report.complete


@pytest.mark.parametrize("build, expected", [(cusp, 3), (tacnode, 4), (triple, 6)])
def test_singular_curve_meets_its_tangent(gf13, build, expected):
    line = HomogeneousPoly.linear(gf13, Y_AXIS)
    assert intersection_multiplicity(build(gf13), line, ORIGIN) == expected


def test_two_tacnodal_branches(gf13):
    # y = x^2 and y = -x^2 share a tangent; the local number is 2
    upper = form(gf13, {(0, 1, 1): 1, (2, 0, 0): -1})
    lower = form(gf13, {(0, 1, 1): 1, (2, 0, 0): 1})
    assert intersection_multiplicity(upper, lower, ORIGIN) == 2


def test_shared_component_is_reported(gf13):
    F = form(gf13, {(1, 1, 0): 1})
    G = form(gf13, {(1, 0, 1): 1})
    with pytest.raises(InfiniteIntersectionError):
        common_points(F, G)


def test_intersections_need_a_prime_field():
    with pytest.raises(TypeError):
        intersection_table(cusp(QQ_FIELD), node(QQ_FIELD))


# genus and lines


def test_octic_genus_count():
    count = genus_deficit(8, [(3, 3), (3, 3), (2, 2), (2, 2), (2, 2), (2, 2)])
    assert (count.arithmetic, count.deficit, count.geometric) == (21, 20, 1)
    assert count.possible
    assert not genus_deficit(3, [(2,), (2,)]).possible


def test_rational_and_irrational_tangent_lines():
    lines, irrational = tangent_lines(node(PrimeField(13)), ORIGIN)
    assert len(lines) == 2 and irrational == 0
    # x^2 + y^2 has no square root of -1 to split over GF(7)
    split = form(PrimeField(7), {(0, 2, 1): 1, (2, 0, 1): 1, (3, 0, 0): -1})
    lines, irrational = tangent_lines(split, ORIGIN)
    assert lines == [] and irrational == 2


def test_line_components(gf13):
    F = form(gf13, {(3, 0, 0): 1, (1, 2, 0): 1, (1, 0, 2): 1})
    assert line_divides(F, (1, 0, 0))
    assert line_components_through(F, [ORIGIN]) == [(1, 0, 0)]


def test_joining_line():
    assert joining_line((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
