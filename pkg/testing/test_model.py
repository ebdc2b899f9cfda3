import numpy as np
import pytest

from choice_tools import (
    BinaryRelation,
    ChoiceCorrespondence,
    LinearOrder,
    Universe,
    WeakOrder,
    Witness,
    as_relation,
    strict_part,
    symmetric_part,
)
from choice_tools.errors import RelationDefectError
from choice_tools.model import validate_menu
from choice_tools.utils.bitmask import all_menus, lowest, members, size, submenus, supermenus, to_menu

X, Y, Z = 0, 1, 2


def test_all_menus_canonical_order():
    assert all_menus(3) == (0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)


def test_all_menus_accepts_universe(xyz):
    assert all_menus(Universe.from_size(3)) == all_menus(3)
    assert all_menus(xyz) == xyz.menus()


def test_submenus_proper_excludes_menu():
    assert list(submenus(0b111, proper=True)) == [0b001, 0b010, 0b100, 0b011, 0b101, 0b110]


def test_supermenus_canonical_order():
    assert list(supermenus(0b001, 3)) == [0b011, 0b101, 0b111]
    assert list(supermenus(0b111, 3)) == []


def test_bit_helpers():
    assert members(0b1011) == [0, 1, 3]
    assert to_menu([0, 1, 3]) == 0b1011
    assert size(0b1011) == 3
    assert lowest(0b1100) == 2


def test_validate_menu_rejects_empty_and_outside():
    assert validate_menu(0b101, 3) == 0b101
    with pytest.raises(ValueError):
        validate_menu(0, 3)
    with pytest.raises(ValueError):
        validate_menu(0b1000, 3)


def test_universe_labels(xyz):
    assert xyz.n == 3
    assert xyz.menu("x", "z") == 0b101
    assert xyz.labels_of(0b110) == ["y", "z"]
    assert xyz.format_menu(0b111) == "{x,y,z}"
    assert Universe.from_size(4).labels == ("a", "b", "c", "d")


@pytest.mark.parametrize("labels", [(), ("x", "x"), ("x", ""), tuple(f"a{i}" for i in range(17))])
def test_universe_invalid(labels):
    with pytest.raises(ValueError):
        Universe(labels)


def test_universe_unknown_label(xyz):
    with pytest.raises(ValueError, match="Unknown label"):
        xyz.index("w")


def test_weak_order_strict_part_linear_chain():
    # yPxPz
    rel = as_relation(WeakOrder.from_classes([[Y], [X], [Z]]))
    assert set(strict_part(rel).pairs()) == {(Y, X), (X, Z), (Y, Z)}
    assert symmetric_part(rel).pairs() == [(X, X), (Y, Y), (Z, Z)]


def test_weak_order_with_indifference():
    # xIyPz
    rel = WeakOrder.from_classes([[X, Y], [Z]]).as_relation()
    sym = symmetric_part(rel)
    assert sym(X, Y) and sym(Y, X)
    strict = strict_part(rel)
    assert strict(X, Z) and strict(Y, Z)
    assert not strict(X, Y)


def test_total_indifference_relates_everything():
    rel = WeakOrder.total_indifference(3).as_relation()
    assert rel.holds.all()
    assert strict_part(rel).pairs() == []


@pytest.mark.parametrize(
    "classes, n",
    [((0b011, 0b010), 2), ((0b001,), 2), ((0b001, 0), 1), ((0b001, 0b110, 0b1000), 3)],
)
def test_weak_order_invalid_partition(classes, n):
    with pytest.raises(ValueError):
        WeakOrder(classes, n)


def test_weak_order_from_relation_round_trip():
    order = WeakOrder.from_classes([[Z], [X, Y]])
    assert WeakOrder.from_relation(order.as_relation()) == order


def test_weak_order_from_relation_incomplete():
    rel = BinaryRelation(np.eye(3, dtype=bool))
    with pytest.raises(RelationDefectError) as err:
        WeakOrder.from_relation(rel)
    assert err.value.prop == "complete"


def test_weak_order_from_relation_intransitive():
    # cycle x > y > z > x, complete but not transitive
    rel = BinaryRelation.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)])
    assert rel.completeness().holds
    check = rel.transitivity()
    assert not check.holds
    x, y, z = check.witness
    assert rel(x, y) and rel(y, z) and not rel(x, z)
    with pytest.raises(RelationDefectError) as err:
        WeakOrder.from_relation(rel)
    assert err.value.prop == "transitive"


def test_linear_order_basics():
    order = LinearOrder((Z, Y, X))
    assert order.position == (2, 1, 0)
    assert order.prefers(Z, X)
    assert not order.prefers(X, Y)
    assert order.as_weak_order().classes == (0b100, 0b010, 0b001)
    assert LinearOrder.from_relation(order.as_relation()) == order


def test_linear_order_rejects_ties():
    rel = WeakOrder.from_classes([[X, Y], [Z]]).as_relation()
    with pytest.raises(RelationDefectError) as err:
        LinearOrder.from_relation(rel)
    assert err.value.prop == "antisymmetric"


@pytest.mark.parametrize("ranking", [(0, 0, 1), (1, 2, 3), ()])
def test_linear_order_invalid(ranking):
    with pytest.raises(ValueError):
        LinearOrder(ranking)


def test_relation_is_read_only():
    rel = BinaryRelation(np.eye(2, dtype=bool))
    with pytest.raises(ValueError):
        rel.holds[0, 1] = True


def test_correspondence_from_mapping_fills_singletons(make_table):
    corr = make_table({"xy": "x", "xz": "x", "yz": "y", "xyz": "xy"})
    assert corr[0b001] == 0b001
    assert corr[0b100] == 0b100
    assert corr[0b111] == 0b011
    assert tuple(menu for menu, _ in corr.items()) == all_menus(3)


def test_correspondence_rejects_empty_choice():
    table = np.array([0, 1, 2, 0], dtype=np.uint32)
    with pytest.raises(ValueError, match="empty"):
        ChoiceCorrespondence(2, table)


def test_correspondence_rejects_choice_outside_menu():
    table = np.array([0, 1, 2, 3], dtype=np.uint32)
    table[1] = 0b10
    with pytest.raises(ValueError, match="not contained"):
        ChoiceCorrespondence(2, table)


def test_correspondence_equality_and_difference(lemma1, example3):
    assert lemma1 == ChoiceCorrespondence(3, lemma1.table)
    assert hash(lemma1) == hash(ChoiceCorrespondence(3, lemma1.table))
    assert lemma1 != example3
    assert lemma1.first_difference(example3) == 0b111
    assert lemma1.first_difference(lemma1) is None


def test_witness_to_dict(xyz):
    witness = Witness("alpha", (0b011, 0b111), (Y,))
    assert witness.to_dict(xyz) == {
        "kind": "alpha",
        "menus": [["x", "y"], ["x", "y", "z"]],
        "alternatives": ["y"],
    }
