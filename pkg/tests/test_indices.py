import itertools
from math import comb

import pytest

from fmzv.indices import (
    Index,
    add_componentwise,
    binary_vectors,
    constrained_compositions,
    depth,
    format_index,
    hoffman_dual,
    parse_index,
    weak_compositions,
    weight,
)
from fmzv.suite import all_indices

from oracles import dual_by_runs


def test_weight_and_depth():
    k = Index((2, 3, 1, 2))
    assert weight(k) == 8 and depth(k) == 4
    assert k.weight == 8 and k.depth == 4
    assert weight(Index((1,))) == 1 and depth(Index((1,))) == 1
    assert weight(Index((5,))) == 5 and depth(Index((5,))) == 1


@pytest.mark.parametrize("bad", [(), (0,), (1, 0), (-1,), (1, -2, 3)])
def test_index_rejects_bad_parts(bad):
    with pytest.raises(ValueError):
        Index(bad)


def test_hoffman_dual_examples():
    assert hoffman_dual(Index((2, 3, 1, 2))) == (1, 2, 1, 3, 1)
    assert hoffman_dual(Index((1,))) == (1,)
    assert hoffman_dual(Index((3,))) == (1, 1, 1)
    assert hoffman_dual(Index((2, 1))) == (1, 2)


def test_hoffman_dual_matches_run_length_oracle():
    for k in all_indices(9):
        assert hoffman_dual(k) == dual_by_runs(k)


def test_hoffman_dual_involution_and_depth_identity():
    for k in all_indices(10):
        kd = hoffman_dual(k)
        assert hoffman_dual(kd) == k
        assert k.depth + kd.depth == k.weight + 1


def test_add_componentwise():
    assert add_componentwise(Index((2, 1)), (0, 3)) == (2, 4)
    assert add_componentwise(Index((1, 1)), (0, 0)) == (1, 1)
    assert add_componentwise(Index((1, 2, 1)), (1, 0, 2)) == (2, 2, 3)
    with pytest.raises(ValueError):
        add_componentwise(Index((1, 2)), (1,))


def test_weak_compositions_order_and_counts():
    assert list(weak_compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(weak_compositions(0, 3)) == [(0, 0, 0)]
    assert list(weak_compositions(3, 1)) == [(3,)]
    for n in range(6):
        for r in range(1, 5):
            got = list(weak_compositions(n, r))
            assert len(got) == comb(n + r - 1, r - 1)
            assert len(set(got)) == len(got)
            assert all(sum(e) == n and min(e) >= 0 for e in got)
            assert got == sorted(got, reverse=True)


def test_weak_compositions_validation():
    with pytest.raises(ValueError):
        list(weak_compositions(-1, 2))
    with pytest.raises(ValueError):
        list(weak_compositions(2, 0))


def test_binary_vectors():
    assert list(binary_vectors(2, 1)) == [(1, 0), (0, 1)]
    assert list(binary_vectors(3, 0)) == [(0, 0, 0)]
    assert list(binary_vectors(3, 3)) == [(1, 1, 1)]
    for r in range(1, 6):
        for i in range(r + 1):
            got = list(binary_vectors(r, i))
            assert len(got) == comb(r, i)
            assert all(sum(v) == i and set(v) <= {0, 1} for v in got)
    with pytest.raises(ValueError):
        list(binary_vectors(3, 4))
    with pytest.raises(ValueError):
        list(binary_vectors(2, -1))


def test_constrained_compositions():
    assert list(constrained_compositions(2, 2, {1})) == [(2, 0), (1, 1)]
    assert list(constrained_compositions(1, 2, {1, 2})) == []
    assert list(constrained_compositions(2, 2, set())) == list(weak_compositions(2, 2))
    with pytest.raises(ValueError):
        list(constrained_compositions(2, 2, {0}))
    with pytest.raises(ValueError):
        list(constrained_compositions(2, 2, {3}))


def test_inclusion_exclusion_binomial():
    for m in range(1, 13):
        assert sum((-1) ** (i - 1) * comb(m, i) for i in range(1, m + 1)) == 1


def test_inclusion_exclusion_over_supports():
    # every exponent vector with at least one nonzero entry is recovered with
    # net multiplicity one from the alternating sum over constrained streams
    for n, r in [(3, 3), (5, 5), (2, 4), (6, 4)]:
        for e in weak_compositions(n, r):
            count = 0
            for i in range(1, min(n, r) + 1):
                for support in itertools.combinations(range(1, r + 1), i):
                    hits = sum(
                        1 for v in constrained_compositions(n, r, support) if v == e
                    )
                    count += (-1) ** (i - 1) * hits
            assert count == 1, (n, r, e)


def test_parse_and_format():
    assert parse_index("2,3,1,2") == Index((2, 3, 1, 2))
    assert parse_index(" 2 , 3 ,1,2 ") == Index((2, 3, 1, 2))
    assert format_index(Index((1, 2, 1, 3, 1))) == "1,2,1,3,1"
    for bad in ("", "2,,1", "2,x", "1.5", "-1,2"):
        with pytest.raises(ValueError):
            parse_index(bad)
