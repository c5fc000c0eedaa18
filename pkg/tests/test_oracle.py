"""Fast paths against the brute-force oracle"""

import pytest

from conftest import sign_gset, small_gset, trial_rng
from functions.core.algebrads import algebrad_check, algebrad_parts, eval_qa
from functions.core.algtheory import evaluate_qc, free_module, module_check, monad_check
from functions.core.errors import CapacityError, DomainError, PreconditionError
from functions.core.gsets import gset_iso, regular_gset, trivial_gset
from functions.core.operads import operad_monoid_check
from functions.core.oracle import (
    bijection_search,
    exhaustive_law_check,
    naive_compose_qa,
    naive_eval_qa,
    naive_eval_qc,
)
from functions.core.presheaves import comm_alg_check, compose_qa, representable_presheaf
from functions.data_sources.corpus import (
    and_monoid,
    associative,
    com_positive,
    functions_algebra,
    functions_algebrad,
    identity_monad,
    pointed_monad,
    powerset_monad,
    representable_functor,
    terminal_algebrad,
    unit_operad,
    xor_monoid,
)

pytestmark = pytest.mark.oracle


def agree(report, verdict):
    assert report.failed_laws == verdict.failed_laws, (report.violations, verdict.failing)


@pytest.mark.parametrize("functor,points", [
    (representable_functor(2, 3), 2),
    (pointed_monad(3).functor, 2),
    (powerset_monad(3).functor, 1),
])
def test_naive_qc_evaluation_matches(functor, points):
    naive = naive_eval_qc(functor, points, functor.max_arity)
    assert naive.stabilized
    assert naive.size == evaluate_qc(functor, points).size


def test_naive_qc_cutoff_past_the_bound():
    with pytest.raises(PreconditionError):
        naive_eval_qc(representable_functor(1, 2), 1, 3)


@pytest.mark.parametrize("k", [1, 2])
def test_naive_qa_evaluation_matches(k):
    presheaf = representable_presheaf(k, 3)
    for monoid in (and_monoid(), xor_monoid()):
        naive = naive_eval_qa(presheaf, monoid, 3)
        assert naive.stabilized
        assert naive.size == eval_qa(presheaf, monoid).size == 2 ** k


def test_naive_qa_composition_matches():
    algebra = functions_algebra(and_monoid(), 2)
    outer = representable_presheaf(1, 2)
    naive = naive_compose_qa(outer, algebra, 2)
    fast = compose_qa(outer, algebra)
    assert [naive[v].size for v in range(3)] == fast.sizes()
    assert all(result.stabilized for result in naive.values())


@pytest.mark.parametrize("structure,checker", [
    (com_positive(3), operad_monoid_check),
    (associative(3), operad_monoid_check),
    (unit_operad(3), operad_monoid_check),
    (identity_monad(3), monad_check),
    (pointed_monad(2), monad_check),
    (powerset_monad(2), monad_check),
    (free_module(pointed_monad(3), 2), module_check),
    (functions_algebra(xor_monoid(), 2), comm_alg_check),
    (terminal_algebrad(2), algebrad_check),
    (functions_algebrad(and_monoid(), 2), algebrad_check),
])
def test_corpus_verdicts_agree(structure, checker, exhaustive):
    verdict = exhaustive_law_check(structure)
    assert verdict.passed, verdict.failing
    agree(checker(structure), verdict)
    assert set(verdict.instances) <= set(checker(structure).laws_checked)


@pytest.mark.parametrize("parts,key", [
    ((2,), (0, 1)),
    ((1, 1), (1, 0, 0)),
    ((1, 2), (0, 0, 1)),
    ((0, 2), (1, 0, 0)),
    ((2, 1), (0, 1, 0)),
    ((1, 1, 1), (5, 0, 0, 0)),
])
def test_ass_mutations_agree(parts, key, exhaustive):
    ass = associative(3)
    value = ass.substitute(parts, key[0], key[1:])
    mutated = ass.with_entry(parts, key, (value + 1) % ass.size(sum(parts)))
    report = operad_monoid_check(mutated)
    assert not report.passed
    agree(report, exhaustive_law_check(mutated))


@pytest.mark.parametrize("p,n,key", [
    (1, 1, (0, 1)),
    (1, 2, (0, 2)),
    (2, 1, (1, 0, 1)),
    (2, 2, (2, 1, 0)),
    (0, 2, (0,)),
    (2, 2, (0, 0, 1)),
])
def test_pointed_monad_mutations_agree(p, n, key, exhaustive):
    monad = pointed_monad(2)
    value = monad.substitute(p, n, key[0], key[1:])
    mutated = monad.with_entry(p, n, key, (value + 1) % monad.functor.size(n))
    report = monad_check(mutated)
    assert not report.passed
    agree(report, exhaustive_law_check(mutated))


@pytest.mark.parametrize("p,q,key", [
    (1, 1, (0, 1)),
    (0, 1, (0, 1)),
    (1, 0, (1, 0)),
    (0, 2, (0, 3)),
])
def test_comm_algebra_mutations_agree(p, q, key, exhaustive):
    algebra = functions_algebra(and_monoid(), 2)
    value = algebra.multiply(p, q, *key)
    mutated = algebra.with_entry(p, q, key, (value + 1) % algebra.presheaf.size(p + q))
    report = comm_alg_check(mutated)
    assert not report.passed
    agree(report, exhaustive_law_check(mutated))


@pytest.mark.parametrize("parts,key", [
    ((1,), (1, 0)),
    ((1, 1), (3, 1, 0)),
    ((2,), (1, 2)),
    ((0, 1), (2, 0, 1)),
])
def test_algebrad_mutations_agree(parts, key, exhaustive):
    algebrad = functions_algebrad(xor_monoid(), 2)
    value = algebrad.substitute(parts, key[0], key[1:])
    mutated = algebrad.with_entry(parts, key, (value + 1) % algebrad.size(sum(parts)))
    report = algebrad_check(mutated)
    assert not report.passed
    agree(report, exhaustive_law_check(mutated))


def sweep(cells, mutate, checker):
    """Mutate every cell to (v + 1) mod size, one at a time, and list where the checker misses or disagrees"""
    missed = []
    for where, key, value, size in cells:
        if size < 2:
            continue
        mutated = mutate(where, key, (value + 1) % size)
        report = checker(mutated)
        verdict = exhaustive_law_check(mutated)
        if report.passed or report.failed_laws != verdict.failed_laws:
            missed.append((where, key, sorted(report.failed_laws), sorted(verdict.failed_laws)))
    return missed


def operad_cells(operad):
    return [(parts, key, value, operad.size(sum(parts)))
            for parts, table in sorted(operad.subs.items()) for key, value in sorted(table.items())]


def monad_cells(monad):
    N, size = monad.max_arity, monad.functor.size
    return [((p, n), key, value, size(n))
            for p in range(N + 1) for n in range(N + 1) for key, value in sorted(monad.table(p, n).items())]


def comm_algebra_cells(algebra):
    return [(pq, key, value, algebra.presheaf.size(sum(pq)))
            for pq, table in sorted(algebra.mult.items()) for key, value in sorted(table.items())]


def algebrad_cells(algebrad):
    return [(parts, key, value, algebrad.size(sum(parts)))
            for parts in algebrad_parts(algebrad.max_arity) for key, value in sorted(algebrad.table(parts).items())]


@pytest.mark.slow
def test_every_ass_mutation_is_caught(exhaustive):
    ass = associative(3)
    cells = operad_cells(ass)
    assert len(cells) > 300
    assert sweep(cells, ass.with_entry, operad_monoid_check) == []


@pytest.mark.slow
@pytest.mark.parametrize("monad", [identity_monad(3), pointed_monad(2), powerset_monad(2)], ids=lambda m: m.name)
def test_every_monad_mutation_is_caught(monad, exhaustive):
    def mutate(pn, key, value):
        return monad.with_entry(*pn, key, value)

    assert sweep(monad_cells(monad), mutate, monad_check) == []


@pytest.mark.slow
def test_every_comm_algebra_mutation_is_caught(exhaustive):
    algebra = functions_algebra(and_monoid(), 3)

    def mutate(pq, key, value):
        return algebra.with_entry(*pq, key, value)

    assert sweep(comm_algebra_cells(algebra), mutate, comm_alg_check) == []


@pytest.mark.slow
@pytest.mark.parametrize("monoid", [and_monoid(), xor_monoid()], ids=lambda m: m.name)
def test_every_algebrad_mutation_is_caught(monoid, exhaustive):
    algebrad = functions_algebrad(monoid, 2)
    assert sweep(algebrad_cells(algebrad), algebrad.with_entry, algebrad_check) == []


def test_broken_module_fails_both(exhaustive):
    module = free_module(pointed_monad(3), 2)
    action = list(module.action)
    action[0] = 1
    broken = type(module)(module.monad, module.labels, tuple(action), name="broken")
    assert not module_check(broken).passed
    assert not exhaustive_law_check(broken).passed


def test_oracle_refuses_modules_past_the_bound():
    with pytest.raises(CapacityError):
        exhaustive_law_check(free_module(pointed_monad(2), 2))


def test_law_filter(exhaustive):
    monad = pointed_monad(2)
    mutated = monad.with_entry(1, 2, (monad.unit, 0), 1)
    verdict = exhaustive_law_check(mutated, "left_unit")
    assert verdict.failed_laws == {"left_unit"}
    assert set(verdict.instances) == {"left_unit"}


def test_no_oracle_for_plain_functors():
    with pytest.raises(DomainError):
        exhaustive_law_check(representable_functor(1, 2))


def test_bijection_search_finds_equivariant_maps():
    source, target = sign_gset(2), regular_gset(2)
    found = bijection_search(source, target)
    assert found is not None
    for x in range(source.size):
        for j in range(source.table.shape[1]):
            assert found[source.table[x, j]] == target.table[found[x], j]
    assert bijection_search(trivial_gset(2, 2), regular_gset(2)) is None
    assert bijection_search(trivial_gset(2, 1), regular_gset(2)) is None


def test_bijection_search_limits():
    with pytest.raises(DomainError):
        bijection_search(trivial_gset(1), trivial_gset(2))
    with pytest.raises(PreconditionError):
        bijection_search(regular_gset(4), regular_gset(4))


@pytest.mark.parametrize("trial", range(10))
def test_iso_agrees_with_search(trial):
    rng = trial_rng(trial)
    n = 3
    x, y = small_gset(rng, n), small_gset(rng, n)
    assert gset_iso(x, y) == (bijection_search(x, y) is not None)
