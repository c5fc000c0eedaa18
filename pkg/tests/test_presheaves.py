from dataclasses import replace

import pytest

from functions.core.errors import DomainError, UnboundedCompositionError
from functions.core.finset import FinMap
from functions.core.presheaves import (
    block_swap,
    comm_alg_check,
    complement,
    compose_qa,
    constant_presheaf,
    day_tensor,
    representable_presheaf,
    subsets,
    unit_qa,
    validate_presheaf,
)
from functions.data_sources.corpus import and_monoid, functions_algebra, terminal_algebrad, xor_monoid

COMM_ALG_LAWS = {"totality", "naturality", "commutativity", "associativity", "left_unit", "right_unit"}


def test_subsets_and_complements():
    assert subsets(2) == [(), (1,), (2,), (1, 2)]
    assert complement((2,), 3) == (1, 3)
    assert block_swap(1, 2).images == (3, 1, 2)


def test_representables():
    h2 = representable_presheaf(2, 3)
    assert h2.sizes() == [1, 2, 4, 8]
    assert h2.generator_degree == 2
    assert validate_presheaf(h2).passed
    # restriction along f is precomposition with f
    y = h2.position(2, (1, 2))
    assert h2.carriers[3][h2.restrict(FinMap.of((2, 2, 1), 2), y)] == (2, 2, 1)


def test_units_and_constants():
    unit = unit_qa(3)
    assert unit.sizes() == [1, 0, 0, 0]
    assert unit.support_bound == 0
    assert validate_presheaf(unit).passed
    assert constant_presheaf(3, 2).sizes() == [3, 3, 3]
    assert constant_presheaf(0, 2).cutoff == 0


def test_missing_restriction_and_support_violations():
    h1 = representable_presheaf(1, 2)
    restrictions = dict(h1.restrictions)
    del restrictions[FinMap.of((1,), 2)]
    assert replace(h1, restrictions=restrictions).restrict(FinMap.of((1,), 2), 0) is None
    assert validate_presheaf(replace(h1, restrictions=restrictions)).failed_laws == {"totality"}
    assert validate_presheaf(replace(h1, support_bound=0)).failed_laws == {"support_bound"}


def test_twisted_identity():
    h2 = representable_presheaf(2, 2)
    restrictions = dict(h2.restrictions)
    restrictions[FinMap.identity(1)] = (1, 0)
    report = validate_presheaf(replace(h2, restrictions=restrictions))
    assert "identity" in report.failed_laws


def test_day_tensor_of_representables():
    product = day_tensor(representable_presheaf(1, 3), representable_presheaf(2, 3))
    assert product.sizes() == [1, 3, 9, 27]
    assert product.generator_degree == 3
    assert validate_presheaf(product).passed


def test_day_tensor_unit():
    h2 = representable_presheaf(2, 3)
    assert day_tensor(unit_qa(3), h2).sizes() == h2.sizes()
    assert day_tensor(h2, unit_qa(3)).sizes() == h2.sizes()
    with pytest.raises(DomainError):
        day_tensor(unit_qa(2), h2)


@pytest.mark.parametrize("monoid", [and_monoid(), xor_monoid()])
def test_functions_algebra_is_commutative(monoid, exhaustive):
    report = comm_alg_check(functions_algebra(monoid, 3))
    assert report.passed, report.violations
    assert set(report.laws_checked) == COMM_ALG_LAWS


def test_terminal_algebra_is_commutative(exhaustive):
    assert comm_alg_check(terminal_algebrad(3).algebra).passed


def test_changed_product_breaks_commutativity(exhaustive):
    algebra = functions_algebra(and_monoid(), 2)
    # M_{1,1}((0), (1)) = (0, 1), moved to (1, 0)
    assert algebra.multiply(1, 1, 0, 1) == 1
    report = comm_alg_check(algebra.with_entry(1, 1, (0, 1), 2))
    assert "commutativity" in report.failed_laws


def test_bad_unit(exhaustive):
    algebra = functions_algebra(and_monoid(), 2)
    assert "totality" in comm_alg_check(replace(algebra, unit=4)).failed_laws


def test_composing_with_representables():
    algebra = functions_algebra(and_monoid(), 3)
    assert compose_qa(representable_presheaf(1, 3), algebra).sizes() == [1, 2, 4, 8]
    assert compose_qa(unit_qa(3), algebra).sizes() == [1, 0, 0, 0]


def test_h2_composite_is_the_tensor_square():
    algebra = functions_algebra(xor_monoid(), 2)
    composite = compose_qa(representable_presheaf(2, 2), algebra)
    assert composite.sizes() == [1, 4, 16]
    assert composite.sizes() == day_tensor(algebra.presheaf, algebra.presheaf).sizes()
    assert validate_presheaf(composite).passed


def test_composition_needs_a_cutoff():
    algebra = functions_algebra(and_monoid(), 3)
    with pytest.raises(UnboundedCompositionError):
        compose_qa(representable_presheaf(4, 3), algebra)
    unbounded = replace(representable_presheaf(1, 3), generator_degree=None)
    with pytest.raises(UnboundedCompositionError):
        compose_qa(unbounded, algebra)
