import pytest

from functions.config.calculus_config import CalculusConfig, ConfigurationManager
from functions.core.errors import CapacityError
from functions.core.finset import Perm, compose_images, invert_images, multinomial
from functions.core.groups import (
    block_embedding,
    block_permutation,
    coset_normalize,
    coset_table,
    symmetric_group,
    young_cosets,
)
from functions.infrastructure.caching import clear_cache


@pytest.mark.parametrize("n", range(5))
def test_symmetric_group_tables(n):
    group = symmetric_group(n)
    assert group.elements[0] == tuple(range(1, n + 1))
    for i, sigma in enumerate(group.elements):
        assert group.mult[i, group.inverse[i]] == 0
        for j, tau in enumerate(group.elements):
            assert group.elements[group.mult[i, j]] == compose_images(sigma, tau)


def test_generators_are_adjacent_transpositions():
    group = symmetric_group(3)
    assert [group.elements[g] for g in group.generators()] == [(2, 1, 3), (1, 3, 2)]


def test_arity_bound_is_enforced():
    ConfigurationManager.activate(CalculusConfig(max_arity=2, arity_bound=3))
    with pytest.raises(CapacityError):
        symmetric_group(4)


@pytest.mark.parametrize("parts", [(2, 1), (1, 1, 1), (0, 3), (2, 2), (1, 0, 2)])
def test_young_cosets_count(parts):
    assert len(young_cosets(parts)) == multinomial(parts)


def test_coset_normalize_factors():
    parts = (2, 1)
    group = symmetric_group(3)
    representatives = {r.images for r in young_cosets(parts)}
    for sigma in group.elements:
        h, r = coset_normalize(parts, Perm.of(sigma))
        assert compose_images(h.images, r.images) == sigma
        assert r.images in representatives
        # h keeps the block {1, 2} in place
        assert set(h.images[:2]) == {1, 2}


def test_coset_table_block_factors():
    parts = (2, 1)
    table = coset_table(parts)
    group = symmetric_group(3)
    for g in range(group.order):
        r = table.representatives[table.representative_of[g]]
        h = compose_images(group.elements[g], invert_images(r))
        assert symmetric_group(2).elements[table.block_factors[g, 0]] == h[:2]


def test_block_embedding_and_permutation():
    assert block_embedding((1, 2), 1, (2, 1)) == (1, 3, 2)
    assert block_permutation((1, 2), (2, 1)).images == (3, 1, 2)


def test_group_tables_are_shared_until_the_cache_is_cleared(fresh_cache):
    first = symmetric_group(3)
    assert symmetric_group(3) is first
    clear_cache()
    rebuilt = symmetric_group(3)
    assert rebuilt is not first
    assert rebuilt.elements == first.elements
