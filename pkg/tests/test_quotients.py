from functions.core.quotients import UnionFind, coequalizer


def test_union_find_merges():
    uf = UnionFind(5)
    assert uf.union(0, 3)
    assert not uf.union(3, 0)
    uf.union_pairs([(1, 4), (4, 3)])
    assert uf.find(1) == uf.find(0)
    assert uf.find(2) != uf.find(0)


def test_coequalizer_classes_are_ordered_by_least_member():
    quotient = coequalizer([3, 1], [0, 4], 5, elements="abcde")
    assert quotient.classes == ((0, 3), (1, 4), (2,))
    assert quotient.size == 3
    assert quotient.representative_labels() == ("a", "b", "c")
    assert quotient.class_of(4) == 1


def test_coequalizer_is_independent_of_pair_order():
    first = coequalizer([0, 2, 4], [1, 3, 0], 6)
    second = coequalizer([4, 0, 2], [0, 1, 3], 6)
    assert first == second


def test_empty_coequalizer():
    quotient = coequalizer([], [], 0)
    assert quotient.size == 0
