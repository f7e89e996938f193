"""Blow-up lattices, the two class tables, two-torsion and the torsion table."""

import pytest

from algebra.primefield import PrimeField
from algebra.rings import QQ_FIELD

from surfaces.cover import contractible_branch_curves, h0_of_class, remove_fixed_exceptional_parts
from surfaces.lattice import (
    BlowupConfig,
    Center,
    CurveClassTable,
    DivClass,
    LatticeMismatchError,
    canonical_class,
    strict_transform_class,
    sum_classes,
)
from surfaces.models import (
    campedelli_branch_components,
    campedelli_table,
    oort_peters_branch_components,
    oort_peters_table,
)
from surfaces.pencils import random_plane_point
from surfaces.torsion import (
    BranchComponent,
    InconsistentTorsionError,
    base_point_count,
    beauville_kernel,
    miyaoka_conclusion,
)


def campedelli_lattice():
    centers = [Center("E")] + [Center(f"E{i}") for i in range(1, 6)]
    centers += [Center(f"F{i}", f"E{i}") for i in range(1, 6)]
    return BlowupConfig(tuple(centers))


def oort_peters_lattice():
    centers = [Center("E")] + [Center(f"E{i}") for i in range(1, 6)]
    centers += [Center(f"F{i}", f"E{i}") for i in range(1, 6)]
    centers += [Center("G1", "F1"), Center("E6")]
    return BlowupConfig(tuple(centers))


@pytest.fixture
def lattice():
    return campedelli_lattice()


# lattice arithmetic


def test_dot_is_symmetric(lattice, rng):
    for _ in range(50):
        a = DivClass(lattice, rng.randint(-5, 5), tuple(rng.randint(-3, 3) for _ in lattice.names))
        b = DivClass(lattice, rng.randint(-5, 5), tuple(rng.randint(-3, 3) for _ in lattice.names))
        assert a.dot(b) == b.dot(a)


def random_blowup(rng):
    """Up to twelve centers, each either a plane point or infinitely near an earlier one."""
    centers = []
    for i in range(rng.randint(0, 12)):
        parent = rng.choice(centers).name if centers and rng.random() < 0.5 else None
        centers.append(Center(f"E{i}", parent))
    return BlowupConfig(tuple(centers))


def test_canonical_square_drops_with_each_blowup(rng):
    for _ in range(200):
        config = random_blowup(rng)
        K = canonical_class(config)
        assert K.dot(K) == 9 - len(config)
        for name in config.names:
            R = DivClass.proper(config, name)
            # every proper exceptional curve is rational
            assert R.dot(R) + K.dot(R) == -2
            assert R.dot(R) == -1 - len(config.children(name))


def test_pairing_is_symmetric_on_random_blowups(rng):
    for _ in range(100):
        config = random_blowup(rng)
        a, b = (
            DivClass(config, rng.randint(-5, 5), tuple(rng.randint(-3, 3) for _ in config.names)) for _ in range(2)
        )
        assert a.dot(b) == b.dot(a)
        assert (a + b).dot(a + b) == a.dot(a) + 2 * a.dot(b) + b.dot(b)


def test_proper_transforms(lattice):
    E1, F1 = DivClass.proper(lattice, "E1"), DivClass.proper(lattice, "F1")
    K = canonical_class(lattice)
    assert E1.dot(E1) == -2
    assert F1.dot(F1) == -1
    assert E1.dot(F1) == 1
    assert K.dot(E1) == 0
    assert K.dot(F1) == -1


def test_formula_parser(lattice):
    table = CurveClassTable(lattice)
    assert table.parse("H - tot(E1)") == DivClass.from_mapping(lattice, 1, {"E1": 1})
    assert table.parse("sum(F,2..5)") == sum_classes(DivClass.proper(lattice, f"F{i}") for i in range(2, 6))
    assert table.parse("2H - 2H") == DivClass(lattice, 0)
    with pytest.raises(ValueError):
        table.parse("H + ?")


def test_table_check_reports_the_difference(lattice):
    table = CurveClassTable(lattice)
    table.add("A", "2H - E")
    table.check("A", "2H - tot(E)")
    with pytest.raises(LatticeMismatchError):
        table.check("A", "2H")


def test_proximity_is_enforced(lattice):
    with pytest.raises(LatticeMismatchError):
        strict_transform_class(lattice, 4, {"E1": 1, "F1": 2})


def test_classes_from_different_blowups_do_not_mix(lattice):
    other = BlowupConfig((Center("E"),))
    with pytest.raises(LatticeMismatchError):
        DivClass.line(lattice) + DivClass.line(other)


def test_fixed_exceptional_curves_are_stripped(lattice):
    cls = DivClass.line(lattice) + DivClass.total(lattice, "E2")
    mobile, fixed = remove_fixed_exceptional_parts(cls)
    assert mobile == DivClass.line(lattice)
    assert fixed == {"E2": 1, "F2": 1}


# linear systems on small blow-ups


def test_conics_through_a_point_and_a_tangent():
    config = BlowupConfig((Center("E", None, (0, 0, 1)), Center("F", "E", None, (0, 1, 0))))
    assert h0_of_class(DivClass.from_mapping(config, 2, {"E": 1}), config, QQ_FIELD) == 5
    assert h0_of_class(DivClass.from_mapping(config, 2, {"E": 1, "F": 1}), config, QQ_FIELD) == 4
    assert h0_of_class(DivClass(config, -1), config, QQ_FIELD) == 0


# class tables


def test_campedelli_table(lattice):
    table = campedelli_table(lattice)
    K, L, C = table["K_Y"], table["L"], table["C"]
    assert table["B"] == 2 * L
    assert 2 * (K + L).dot(K + L) == -4
    # the octic's strict transform has genus one
    assert C.dot(C + K) == 0


def test_campedelli_two_torsion(lattice):
    table = campedelli_table(lattice)
    components = [BranchComponent(n, c) for n, c in campedelli_branch_components(table).items()]
    kernel = beauville_kernel(components, table["B"])
    assert (kernel.kernel_dimension, kernel.rank) == (2, 1)
    witness = kernel.representatives[0]
    assert witness.components == ["Q", "E2", "E3", "E4", "E5"]
    assert witness.half == table.parse("H - tot(F2) - tot(F3) - tot(F4) - tot(F5)").coordinates()


def test_oort_peters_table():
    table = oort_peters_table(oort_peters_lattice())
    exceptional = table.proper_exceptionals()
    K, L = table["K_Y"], table["L"]
    assert table["B1"] == table["Q1"] + table["Q2"] + sum_classes(exceptional[f"E{i}"] for i in range(2, 6))
    assert table["B2"] == table["C1"] + table["C2"] + exceptional["E1"]
    assert sum_classes(oort_peters_branch_components(table).values()) == table["B"]
    assert 2 * (K + L).dot(K + L) == -4
    mobile, _ = remove_fixed_exceptional_parts(2 * K + 2 * L)
    assert mobile == table["bicanonical"]
    for name in ("y0", "y1", "y2", "y3"):
        assert table[name] == table["bicanonical"], name


def test_oort_peters_two_torsion():
    table = oort_peters_table(oort_peters_lattice())
    components = [BranchComponent(n, c) for n, c in oort_peters_branch_components(table).items()]
    kernel = beauville_kernel(components, table["B"])
    assert kernel.rank == 1
    assert kernel.representatives[0].half == table["L1"].coordinates()


def test_contracted_curves_come_from_the_lattice(lattice):
    table = campedelli_table(lattice)
    components = campedelli_branch_components(table)
    assert contractible_branch_curves(components) == ["E1", "E2", "E3", "E4", "E5"]
    # the octic has genus one and is not contracted
    K = canonical_class(lattice)
    assert components["C"].dot(components["C"] + K) == 0
    del components["E3"]
    assert contractible_branch_curves(components) == ["E1", "E2", "E4", "E5"]


def test_oort_peters_contracted_curves():
    table = oort_peters_table(oort_peters_lattice())
    components = oort_peters_branch_components(table)
    assert contractible_branch_curves(components) == ["E1", "E2", "E3", "E4", "E5"]
    # C1 is a smooth cubic: self-intersection -2 but not rational
    C1 = components["C1"]
    assert C1.dot(C1) == -2
    assert "C1" not in contractible_branch_curves(components)


def test_kernel_needs_the_branch_sum(lattice):
    table = campedelli_table(lattice)
    components = [BranchComponent("C", table["C"]), BranchComponent("Q", table["Q"])]
    with pytest.raises(LatticeMismatchError):
        beauville_kernel(components, table["B"])


# torsion table


@pytest.mark.parametrize(
    "rank, points, group",
    [(0, 0, "trivial"), (1, 0, "Z/2"), (0, 1, "Z/3"), (1, 1, "Z/4"), (0, 2, "Z/5")],
)
def test_miyaoka_table(rank, points, group):
    assert miyaoka_conclusion(rank, points) == group


def test_inconsistent_torsion():
    with pytest.raises(InconsistentTorsionError):
        miyaoka_conclusion(1, 2)


@pytest.mark.parametrize("order, count", [(1, 0), (2, 0), (3, 1), (4, 1), (5, 2)])
def test_base_point_count(order, count):
    assert base_point_count(order) == count


def test_random_plane_points_are_never_the_origin(rng):
    field = PrimeField(2)
    for _ in range(200):
        point = random_plane_point(field, rng)
        assert any(not field.is_zero(c) for c in point)
