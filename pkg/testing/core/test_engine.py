import pytest

from zerosum.error import BudgetExceeded, SpecMismatchError
from zerosum.group import GroupSpec, GroupMultiset, multiset_sum
from zerosum.engine import (ZerosumQuery, find_zerosum, min_zerosum_length,
                            longest_zerosum, max_zerosum_length, has_zerosum,
                            representable_sums, all_zerosum_subsets,
                            max_disjoint_zerosums, packing_number)
from testing.support import (rng, random_multiset, naive_zerosum_lengths,
                             naive_packing, naive_constant, selections, slow)

SMALL_GROUPS = [GroupSpec((3, 3)), GroupSpec((2, 2, 2)), GroupSpec((9,)),
                GroupSpec((3, 6)), GroupSpec((3, 3, 3))]


def test_empty_multiset():
    spec = GroupSpec((3, 3))
    A = GroupMultiset.empty(spec)
    assert find_zerosum(A) is None
    assert longest_zerosum(A) is None
    assert not has_zerosum(A)
    assert packing_number(A) == 0
    assert representable_sums(A, 3) == frozenset([spec.identity()])

def test_identity_is_a_zerosum():
    spec = GroupSpec((3, 3))
    A = GroupMultiset.from_elements(spec, [(1, 0), (0, 0)])
    assert min_zerosum_length(A) == 1
    assert find_zerosum(A).sub == GroupMultiset.from_indices(spec, [0])

def test_lexicographic_tie_break():
    spec = GroupSpec((5,))
    A = GroupMultiset.from_indices(spec, [4, 3, 2, 1])
    assert find_zerosum(A).sub.indices() == [1, 4]
    B = GroupMultiset.from_indices(spec, [2, 3, 3, 4, 4])
    assert find_zerosum(B).sub.indices() == [2, 3]

def test_min_length_against_brute_force():
    r = rng(7)
    for spec in SMALL_GROUPS:
        for size in range(1, 8):
            for _ in range(15):
                A = random_multiset(spec, size, r)
                lengths = naive_zerosum_lengths(A)
                expected = lengths[0] if lengths else None
                assert min_zerosum_length(A) == expected, A
                expected = lengths[-1] if lengths else None
                assert max_zerosum_length(A) == expected, A

def test_certificates_are_sub_multisets():
    r = rng(8)
    spec = GroupSpec((3, 3, 3))
    for _ in range(40):
        A = random_multiset(spec, 8, r)
        certificate = find_zerosum(A)
        if certificate is not None:
            assert certificate.sub.issubset(A)
            assert multiset_sum(certificate.sub).is_zero()
        longest = longest_zerosum(A)
        if longest is not None:
            assert longest.verify(A)

def test_length_bounds():
    spec = GroupSpec((3, 3))
    A = GroupMultiset.from_elements(spec, [(1, 0)] * 3 + [(1, 1), (2, 2)])
    assert min_zerosum_length(A) == 2
    certificate = find_zerosum(A, ZerosumQuery(min_len=3))
    assert len(certificate) == 3
    assert certificate.sub == GroupMultiset.from_elements(spec, [(1, 0)] * 3)
    assert find_zerosum(A, ZerosumQuery(min_len=4, max_len=4)) is None
    assert len(find_zerosum(A, ZerosumQuery(min_len=5))) == 5
    assert has_zerosum(A, max_len=2)
    assert not has_zerosum(A, max_len=1)
    with pytest.raises(ValueError):
        ZerosumQuery(min_len=3, max_len=2)

def test_target_query():
    spec = GroupSpec((3, 3))
    A = GroupMultiset.from_elements(spec, [(1, 0), (0, 1), (0, 1)])
    certificate = find_zerosum(A, ZerosumQuery(target=spec.element(1, 2)))
    assert certificate.sub == GroupMultiset.from_elements(
        spec, [(1, 0), (0, 1), (0, 1)])
    assert find_zerosum(A, ZerosumQuery(target=spec.element(2, 0))) is None
    with pytest.raises(SpecMismatchError):
        find_zerosum(A, ZerosumQuery(target=GroupSpec((9,)).element(1)))

def test_distinct_only():
    spec = GroupSpec((3,))
    A = GroupMultiset(spec, {1: 3})
    assert min_zerosum_length(A) == 3
    assert find_zerosum(A, ZerosumQuery(distinct_only=True)) is None

def test_longest_zerosum():
    spec = GroupSpec((3,))
    A = GroupMultiset.from_indices(spec, [1, 1, 2])
    assert max_zerosum_length(A) == 2
    assert max_zerosum_length(GroupMultiset.from_indices(spec, [1])) is None
    B = GroupMultiset.from_indices(spec, [1, 1, 1, 2, 2, 2])
    assert longest_zerosum(B).sub == B

def test_representable_sums():
    spec = GroupSpec((5,))
    A = GroupMultiset.from_indices(spec, [1, 1])
    assert representable_sums(A, 1) == frozenset(
        spec.from_index(i) for i in (0, 1))
    assert representable_sums(A, 2) == frozenset(
        spec.from_index(i) for i in (0, 1, 2))
    with pytest.raises(ValueError):
        representable_sums(A, -1)

def test_representable_sums_against_brute_force():
    r = rng(9)
    spec = GroupSpec((3, 3, 3))
    for _ in range(20):
        A = random_multiset(spec, 6, r)
        for picks in range(4):
            expected = set([0])
            expected.update(total for length, total, _ in selections(A)
                            if length <= picks)
            got = representable_sums(A, picks)
            assert set(x.index for x in got) == expected

def test_all_zerosum_subsets():
    spec = GroupSpec((3, 3))
    r = rng(10)
    for _ in range(20):
        A = random_multiset(spec, 7, r)
        found = all_zerosum_subsets(A)
        expected = sum(1 for _, total, _ in selections(A) if total == 0)
        assert len(found) == expected
        assert len(set(found)) == len(found)
        assert [len(B) for B in found] == sorted(len(B) for B in found)
        assert all(multiset_sum(B).is_zero() for B in found)

def test_all_zerosum_subsets_guard():
    spec = GroupSpec((3,))
    with pytest.raises(BudgetExceeded):
        all_zerosum_subsets(GroupMultiset(spec, {1: 20}))

def test_packing_examples():
    spec = GroupSpec((3,))
    assert packing_number(GroupMultiset(spec, {1: 3, 2: 3})) == 3
    assert packing_number(GroupMultiset(spec, {0: 2, 1: 1})) == 2
    assert packing_number(GroupMultiset(spec, {1: 2})) == 0
    result = max_disjoint_zerosums(GroupMultiset(spec, {1: 6}))
    assert result.count == 2
    assert all(len(part) == 3 for part in result.parts)

def test_packing_against_brute_force():
    r = rng(11)
    for spec in [GroupSpec((3, 3)), GroupSpec((2, 4)), GroupSpec((5,))]:
        for _ in range(25):
            A = random_multiset(spec, 7, r)
            result = max_disjoint_zerosums(A)
            assert result.count == naive_packing(A), A
            union = GroupMultiset.empty(spec)
            for part in result.parts:
                assert part.verify(A)
                union = union + part.sub
            assert union.issubset(A)

@slow
def test_lengths_and_packing_against_brute_force_z3_2():
    r = rng(21)
    spec = GroupSpec((3, 3))
    for _ in range(500):
        A = random_multiset(spec, r.randrange(1, 13), r)
        lengths = naive_zerosum_lengths(A)
        assert min_zerosum_length(A) == (lengths[0] if lengths else None), A
        assert max_zerosum_length(A) == (lengths[-1] if lengths else None), A
        assert packing_number(A) == naive_packing(A), A

def test_packing_is_monotone():
    r = rng(22)
    for spec in [GroupSpec((3, 3)), GroupSpec((3, 3, 3))]:
        for _ in range(60):
            A = random_multiset(spec, r.randrange(0, 11), r)
            before = packing_number(A)
            after = packing_number(A.add(r.randrange(spec.order)))
            assert before <= after <= before + 1, A

def test_packing_at_least():
    spec = GroupSpec((3,))
    A = GroupMultiset(spec, {1: 9, 2: 9})
    assert packing_number(A) == 9
    assert packing_number(A, at_least=2) >= 2
    assert packing_number(A, at_least=20) == 9
    with pytest.raises(BudgetExceeded):
        packing_number(GroupMultiset(spec, {1: 50}))

def test_davenport_by_brute_force():
    assert naive_constant(GroupSpec((3,)), has_zerosum) == 3
    assert naive_constant(GroupSpec((3, 3)), has_zerosum) == 5
    assert naive_constant(GroupSpec((2, 2, 2)), has_zerosum) == 4
    assert naive_constant(GroupSpec((2, 4)), has_zerosum) == 5

@slow
def test_davenport_cyclic_nine():
    assert naive_constant(GroupSpec((9,)), has_zerosum) == 9
