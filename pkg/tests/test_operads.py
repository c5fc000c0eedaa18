import pytest

from functions.core.operads import OperadAlgebra, algebra_check, free_algebra, operad_monoid_check, operad_parts
from functions.data_sources.corpus import associative, com_positive, com_positive_terminal, unit_operad

OPERAD_LAWS = {"totality", "equivariance_blocks", "equivariance_relabel", "left_unit", "right_unit", "associativity"}


@pytest.mark.parametrize("builder", [com_positive, associative, unit_operad])
def test_corpus_operads_satisfy_the_monoid_laws(builder, exhaustive):
    report = operad_monoid_check(builder(3))
    assert report.passed, report.violations
    assert set(report.laws_checked) == OPERAD_LAWS
    assert report.notices == []


def test_operad_parts_cover_small_compositions():
    parts = set(operad_parts(2))
    assert {(), (0,), (2,), (1, 1), (0, 2), (0, 0)} <= parts
    assert (3,) not in parts


def test_ass_substitution_orders_blocks():
    ass = associative(3)
    # x = (2, 1) puts the second block first
    swapped = 1
    assert ass.substitute((1, 2), swapped, (0, 0)) is not None
    assert ass.carrier.carriers[3].label(ass.substitute((1, 2), swapped, (0, 0))) == (3, 1, 2)
    assert ass.carrier.carriers[3].label(ass.substitute((1, 2), 0, (0, 1))) == (1, 3, 2)


def test_out_of_range_entry_breaks_totality(exhaustive):
    broken = associative(2).with_entry((1, 1), (0, 0, 0), 99)
    report = operad_monoid_check(broken)
    assert "totality" in report.failed_laws
    assert report.first_witness("totality")["key"] == [0, 0, 0]


def test_bad_unit_is_reported(exhaustive):
    ass = associative(2)
    broken = type(ass)(ass.carrier, 7, ass.subs, name="Ass with no unit")
    assert "totality" in operad_monoid_check(broken).failed_laws


def test_changed_entry_breaks_equivariance(exhaustive):
    ass = associative(3)
    value = ass.substitute((1, 2), 0, (0, 0))
    report = operad_monoid_check(ass.with_entry((1, 2), (0, 0, 0), (value + 1) % 6))
    assert not report.passed
    assert report.failed_laws & {"equivariance_blocks", "equivariance_relabel", "left_unit", "associativity"}


def test_terminal_algebra(exhaustive):
    report = algebra_check(com_positive_terminal(3))
    assert report.passed, report.violations


def test_projection_is_not_commutative(exhaustive):
    operad = com_positive(2)
    actions = {
        1: {(0, m): m for m in range(2)},
        2: {(0, a, b): a for a in range(2) for b in range(2)},
    }
    report = algebra_check(OperadAlgebra(operad, 2, actions, name="first"))
    assert "equivariance" in report.failed_laws


def test_wrong_unit_action(exhaustive):
    operad = com_positive(2)
    actions = {
        1: {(0, 0): 1, (0, 1): 0},
        2: {(0, a, b): 0 for a in range(2) for b in range(2)},
    }
    report = algebra_check(OperadAlgebra(operad, 2, actions, name="flip"))
    assert {"unit", "associativity"} <= report.failed_laws


def test_missing_action_entries(exhaustive):
    algebra = com_positive_terminal(2)
    actions = {1: algebra.actions[1], 2: {}}
    report = algebra_check(OperadAlgebra(algebra.operad, 1, actions))
    assert report.failed_laws == {"totality"}


def test_free_algebra_on_one_point(exhaustive):
    algebra = free_algebra(com_positive(3), 1)
    assert algebra.size == 3
    assert algebra.partial
    report = algebra_check(algebra)
    assert report.passed, report.violations
    assert report.notices


def test_free_ass_algebra(exhaustive):
    algebra = free_algebra(associative(2), ["a", "b"])
    assert algebra.size == 7
    assert algebra_check(algebra).passed
