import numpy as np
import pytest

from functions.core.algebrads import CommMonoid, algebrad_check, eval_qa, product_monoid, pushforward
from functions.core.errors import PreconditionError, UnboundedEvaluationError
from functions.core.finset import FinMap
from functions.core.presheaves import representable_presheaf, unit_qa
from functions.data_sources.corpus import (
    and_monoid,
    functions_algebrad,
    make_monoid,
    terminal_algebrad,
    trivial_monoid,
    xor_monoid,
)

ALGEBRAD_LAWS = {"totality", "left_unit", "right_unit", "associativity", "multiplicativity", "naturality",
                 "substitution_compatibility"}


def test_corpus_monoids_are_commutative_monoids():
    for monoid in (trivial_monoid(), and_monoid(), xor_monoid(), product_monoid(and_monoid(), xor_monoid())):
        assert monoid.violations() == []
    assert product_monoid(and_monoid(), xor_monoid()).size == 4


def test_monoid_violations_are_named():
    left_zero = CommMonoid((0, 1), np.array([[0, 0], [1, 1]]), 0, "left zero")
    laws = {v["law"] for v in left_zero.violations()}
    assert {"unit", "commutativity"} <= laws
    assert CommMonoid((0, 1), np.array([[0, 2], [1, 1]]), 0).violations() == [{"law": "closure"}]
    assert CommMonoid((0,), np.array([[0]]), 3).violations() == [{"law": "unit", "unit": 3}]
    assert len(left_zero.violations(limit=1)) == 1


def test_pushforward_multiplies_along_fibres():
    assert pushforward(and_monoid(), FinMap.of((1, 1, 2), 2), (1, 0, 1)) == (0, 1)
    assert pushforward(xor_monoid(), FinMap.of((2, 1, 2), 2), (1, 1, 1)) == (1, 0)
    # an empty fibre gets the unit
    assert pushforward(xor_monoid(), FinMap.of((1,), 2), (1,)) == (1, 0)
    assert pushforward(and_monoid(), FinMap.of((), 1), ()) == (1,)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_evaluating_representables_gives_powers(k):
    three = make_monoid((0, 1, 2), lambda a, b: (a + b) % 3, 0, "Z/3")
    assert eval_qa(representable_presheaf(k, 3), three).size == 3 ** k
    assert eval_qa(representable_presheaf(k, 3), and_monoid()).size == 2 ** k


def test_evaluating_the_unit():
    assert eval_qa(unit_qa(2), xor_monoid()).size == 1


def test_evaluation_refuses_bad_monoids():
    left_zero = CommMonoid((0, 1), np.array([[0, 0], [1, 1]]), 0, "left zero")
    with pytest.raises(PreconditionError) as raised:
        eval_qa(representable_presheaf(1, 2), left_zero)
    assert raised.value.details["violations"]


def test_evaluation_needs_a_cutoff():
    with pytest.raises(UnboundedEvaluationError):
        eval_qa(representable_presheaf(4, 3), and_monoid())


@pytest.mark.parametrize("build", [
    lambda: terminal_algebrad(3),
    lambda: functions_algebrad(and_monoid(), 2),
    lambda: functions_algebrad(xor_monoid(), 2),
])
def test_corpus_algebrads_satisfy_the_laws(build, exhaustive):
    report = algebrad_check(build())
    assert report.passed, report.violations
    assert set(report.laws_checked) == ALGEBRAD_LAWS


def test_substitution_scales_blocks():
    algebrad = functions_algebrad(and_monoid(), 2)
    carriers = algebrad.presheaf.carriers
    x = algebrad.presheaf.position(2, (0, 1))
    ys = (algebrad.presheaf.position(1, (1,)), algebrad.presheaf.position(1, (1,)))
    assert carriers[2][algebrad.substitute((1, 1), x, ys)] == (0, 1)
    assert algebrad.table((0,)) == {(0, 0): 0, (1, 0): 0}


def test_overridden_unit_entry(exhaustive):
    algebrad = functions_algebrad(and_monoid(), 2)
    broken = algebrad.with_entry((1,), (algebrad.unit, 0), 1)
    report = algebrad_check(broken)
    assert "left_unit" in report.failed_laws
    assert report.first_witness("left_unit") == {"p": 1, "a": 0, "got": 1}
