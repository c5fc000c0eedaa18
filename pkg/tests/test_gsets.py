import numpy as np
import pytest

from conftest import sign_gset
from functions.core.errors import DomainError
from functions.core.gsets import (
    GSet,
    disjoint_union,
    empty_gset,
    gset_iso,
    gset_violations,
    induce,
    orbit_quotient,
    regular_gset,
    trivial_gset,
)


@pytest.mark.parametrize("gset", [regular_gset(3), trivial_gset(2, 3), sign_gset(3), empty_gset(4)])
def test_builtin_gsets_are_right_actions(gset):
    assert gset_violations(gset) == []


def test_broken_table_is_located():
    broken = GSet(2, np.array([[1, 1], [0, 0]]))
    problems = gset_violations(broken)
    assert problems[0] == {"problem": "identity", "element": 0, "value": 1}
    out_of_range = GSet(2, np.array([[0, 5]]))
    assert gset_violations(out_of_range)[0]["problem"] == "range"


def test_regular_action_is_composition():
    gset = regular_gset(3)
    x = gset.labels.index((2, 3, 1))
    moved = gset.act(x, (2, 1, 3))
    assert gset.label(moved) == (3, 2, 1)


def test_disjoint_union_tags_elements():
    union = disjoint_union([trivial_gset(2, 1), regular_gset(2)], tags=["a", "b"])
    assert union.size == 3
    assert union.label(0) == ("a", 0)
    assert gset_violations(union) == []
    with pytest.raises(DomainError):
        disjoint_union([trivial_gset(1), trivial_gset(2)])
    assert disjoint_union([], n=3).size == 0


def test_induction_sizes_and_orbits():
    induced = induce([trivial_gset(2), trivial_gset(1)])
    assert induced.size == 3
    assert orbit_quotient(induced).size == 1
    assert gset_violations(induced) == []
    assert gset_iso(induce([trivial_gset(1), trivial_gset(1)]), regular_gset(2))
    assert induce([trivial_gset(1), empty_gset(2)]).size == 0


def test_induction_of_regular_factors_is_regular():
    assert gset_iso(induce([regular_gset(1), regular_gset(2)]), regular_gset(3))


def test_orbit_quotient_of_trivial_set():
    assert orbit_quotient(trivial_gset(3, 4)).size == 4
    assert orbit_quotient(regular_gset(3)).size == 1


def test_orbit_representative_is_least_by_index():
    # rows are elements, columns the identity and the transposition
    swapped = GSet(2, np.array([[0, 1], [1, 0]], dtype=np.int64), labels=("b", "a"))
    quotient = orbit_quotient(swapped)
    assert quotient.size == 1
    assert quotient.representatives == (0,)
    assert quotient.representative_labels() == ("b",)


def test_iso_compares_orbit_types():
    assert gset_iso(sign_gset(2), regular_gset(2))
    assert not gset_iso(sign_gset(3), trivial_gset(3, 2))
    assert not gset_iso(trivial_gset(2, 1), trivial_gset(2, 2))
    with pytest.raises(DomainError):
        gset_iso(trivial_gset(1), trivial_gset(2))
