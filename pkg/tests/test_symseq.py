import numpy as np
import pytest

from conftest import random_symseq, trial_rng
from functions.core.errors import CapacityError, DomainError, UnboundedCompositionError
from functions.core.gsets import GSet, empty_gset, gset_iso, trivial_gset
from functions.core.symseq import (
    SymSeq,
    compose,
    evaluate,
    representable,
    tensor,
    tensor_product,
    unit_comp,
    unit_tensor,
    validate_symseq,
)
from functions.data_sources.corpus import associative, com_positive

TRIALS = 50


def isomorphic(a: SymSeq, b: SymSeq) -> bool:
    return a.max_arity == b.max_arity and all(gset_iso(x, y) for x, y in zip(a.carriers, b.carriers))


def test_carrier_count_must_match_truncation():
    with pytest.raises(DomainError):
        SymSeq(2, (trivial_gset(0), trivial_gset(1)))


def test_units_and_representables():
    assert unit_tensor(3).sizes() == [1, 0, 0, 0]
    assert unit_comp(3).sizes() == [0, 1, 0, 0]
    assert representable(2, 3).sizes() == [0, 0, 2, 0]
    with pytest.raises(CapacityError):
        representable(4, 3)


def test_validate_symseq_flags_bad_carriers():
    assert validate_symseq(com_positive(3).carrier).passed
    bad = SymSeq(2, (empty_gset(0), trivial_gset(1), trivial_gset(2)), support_bound=1)
    report = validate_symseq(bad)
    assert report.failed_laws == {"support_bound"}
    broken = SymSeq(2, (empty_gset(0), trivial_gset(1), GSet(2, np.array([[1, 1], [0, 0]]))))
    assert "action" in validate_symseq(broken).failed_laws
    mislabelled = SymSeq(1, (empty_gset(0), trivial_gset(2)))
    assert validate_symseq(mislabelled).failed_laws == {"arity"}


def test_tensor_of_representables():
    product = tensor(representable(1, 3), representable(2, 3))
    assert isomorphic(product, representable(3, 3))
    assert product.support_bound == 3


def test_tensor_sizes_count_shuffles():
    com = com_positive(4).carrier
    assert tensor(com, com).sizes() == [0, 0, 2, 6, 14]


def test_tensor_unit_and_symmetry():
    com = com_positive(3).carrier
    ass = associative(3).carrier
    assert isomorphic(tensor(unit_tensor(3), ass), ass)
    assert isomorphic(tensor(com, ass), tensor(ass, com))
    assert tensor_product().sizes() == unit_tensor().sizes()


def test_composition_counts_set_partitions():
    com = com_positive(4).carrier
    assert compose(com, com).sizes() == [0, 1, 2, 5, 15]


def test_composition_units():
    ass = associative(3).carrier
    assert isomorphic(compose(ass, unit_comp(3)), ass)
    assert isomorphic(compose(unit_comp(3), ass), ass)


def test_nullary_operations_need_a_support_bound():
    com = com_positive(3).carrier
    pointed = SymSeq(3, tuple(trivial_gset(n) for n in range(4)))
    with pytest.raises(UnboundedCompositionError):
        compose(com, pointed)
    # h2 has support bound 2, so Y_0 may be nonempty
    assert compose(representable(2, 3), pointed).sizes()[0] == 1


def test_mismatched_truncations():
    with pytest.raises(DomainError):
        tensor(unit_tensor(2), unit_tensor(3))


def test_evaluation_sizes():
    assert evaluate(com_positive(2).carrier, 2).size == 5
    assert evaluate(com_positive(4).carrier, 2).size == 14
    assert evaluate(representable(3, 3), 2).size == 8
    # Ass_0 is a point, Ass_1 a point, Ass_2 acts freely
    assert evaluate(associative(2).carrier, ["a", "b"]).size == 1 + 2 + 4


def test_evaluation_of_tensor_is_a_product():
    product = tensor(representable(1, 3), representable(2, 3))
    assert evaluate(product, 3).size == 3 * 9


@pytest.mark.slow
@pytest.mark.parametrize("trial", range(TRIALS))
def test_random_composition_is_associative(trial):
    rng = trial_rng(trial)
    x = random_symseq(rng, 4, name="X")
    y = random_symseq(rng, 4, nullary=False, name="Y")
    z = random_symseq(rng, 4, nullary=False, name="Z")
    assert isomorphic(compose(compose(x, y), z), compose(x, compose(y, z)))


@pytest.mark.slow
@pytest.mark.parametrize("trial", range(TRIALS))
def test_random_tensor_is_associative(trial):
    rng = trial_rng(trial)
    a, b, c = (random_symseq(rng, 4, name=name) for name in "ABC")
    assert isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


def test_trials_draw_different_sequences():
    draws = {tuple(str(c.table.tolist()) for c in random_symseq(trial_rng(t), 4).carriers) for t in range(TRIALS)}
    assert len(draws) > 1
