import itertools

import pytest

from zerosum import config
from zerosum.engine import (ZerosumQuery, find_zerosum, has_zerosum,
                            packing_number)
from zerosum.error import BudgetExceeded, PreconditionError
from zerosum.group import GroupSpec, GroupMultiset
from zerosum.search import (ShortZerosum, DisjointZerosums, AnyOf,
                            LevelSearch, ConstantQuery, compute_constant,
                            reduction_bound, witness_extensions,
                            table_entries, verify_table, PUBLISHED_Z3_3,
                            max_zerosum_free_supports)
from testing.support import naive_constant, slow

Z3 = GroupSpec((3,))
Z3_2 = GroupSpec((3, 3))
Z3_3 = GroupSpec((3, 3, 3))


def test_properties():
    A = GroupMultiset.from_indices(Z3, [1, 1, 1, 2])
    assert ShortZerosum().has(A)
    assert ShortZerosum(max_len=2).has(A)
    assert not ShortZerosum(max_len=1).has(A)
    assert ShortZerosum(min_len=3).has(A)
    assert not ShortZerosum(min_len=5).has(A)
    assert not DisjointZerosums(2).has(A)
    assert DisjointZerosums(2).has(A.add(2))
    assert AnyOf(ShortZerosum(max_len=1), DisjointZerosums(1)).has(A)
    assert not AnyOf(ShortZerosum(max_len=1), DisjointZerosums(2)).has(A)

def test_extension_agrees_with_has():
    spec = Z3_2
    A = GroupMultiset.from_indices(spec, [1, 3, 3, 4])
    for prop in (ShortZerosum(), ShortZerosum(max_len=3),
                 ShortZerosum(min_len=3, max_len=4), DisjointZerosums(2),
                 AnyOf(ShortZerosum(max_len=2), DisjointZerosums(2))):
        context = prop.prepare(spec, A.vector())
        for x in range(spec.order):
            assert prop.extension_has(spec, A.vector(), context, x) == \
                prop.has(A.add(x)), (prop, x)

def test_query_validation():
    with pytest.raises(ValueError):
        ConstantQuery(Z3_3, 'E')
    with pytest.raises(ValueError):
        ConstantQuery(Z3_3, 'D_k')
    with pytest.raises(ValueError):
        ConstantQuery(Z3_3, 'D', 2)
    with pytest.raises(ValueError):
        ConstantQuery(Z3_3, 'D_k', 0)
    with pytest.raises(PreconditionError):
        ConstantQuery(Z3_3, 'D^k', 2)

def test_query_names():
    assert ConstantQuery(Z3_3, 'Dk', 2).family == 'D_k'
    assert ConstantQuery(Z3_3, 'D_k', 2).name() == 'D_2'
    assert ConstantQuery(Z3_3, 'D^k*', 3).name() == 'D^3*'
    assert ConstantQuery(Z3_3, 'D*').name() == 'D*'
    assert ConstantQuery(Z3_3, 'D^k*', 4).starred
    assert ConstantQuery(Z3_3, 'D_k', 3).as_dict() == {
        'group': [3, 3, 3], 'family': 'D_k', 'k': 3}
    assert ConstantQuery(Z3_3, 'D_k', 3).key() == ((3, 3, 3), 'D_k', 3)

def test_query_properties():
    assert isinstance(ConstantQuery(Z3_3, 'D_k', 1).prop(), ShortZerosum)
    assert isinstance(ConstantQuery(Z3_3, 'D_k', 2).prop(), DisjointZerosums)
    assert ConstantQuery(Z3_3, 'D^k', 4).prop().max_len == 4

@pytest.mark.parametrize('factors, value', [
    ((3,), 3), ((3, 3), 5), ((2, 2, 2), 4), ((2, 4), 5), ((5,), 5),
    ((9,), 9),
])
def test_davenport(factors, value):
    result = compute_constant(ConstantQuery(GroupSpec(factors), 'D'))
    assert result.value == value
    assert len(result.witness) == value - 1
    assert not has_zerosum(result.witness)
    assert witness_extensions(result)

def test_search_matches_brute_force():
    for family, k, has in [
            ('D*', None, has_zerosum),
            ('D^k', 3, lambda A: has_zerosum(A, max_len=3)),
            ('D_k', 2, lambda A: packing_number(A) >= 2)]:
        distinct = family.endswith('*')
        q = ConstantQuery(Z3_2, family, k)
        expected = naive_constant(Z3_2, has, distinct)
        assert compute_constant(q, exhaustive=True).value == expected

def test_cyclic_multiples():
    for k in (1, 2, 3):
        q = ConstantQuery(Z3, 'D_k', k)
        assert compute_constant(q).value == 3 * k

def test_reduction_bound_rank_two():
    q = ConstantQuery(Z3_2, 'D_k', 2)
    assert reduction_bound(q) == (8, 3)
    result = compute_constant(q)
    assert result.value == 8
    assert result.method == 'exhaustive'

def test_memoized():
    q = ConstantQuery(Z3_2, 'D')
    assert compute_constant(q) is compute_constant(q)

def test_levels_are_canonical():
    search = LevelSearch(Z3_2, ShortZerosum(), False)
    sizes = [(level.size, len(level)) for level in search.levels()]
    assert sizes[0] == (0, 1)
    assert sizes[1] == (1, 1)        # every nonzero point is alike
    assert sizes[-1][0] == 4
    assert search.symmetric
    assert search.maximal

def test_non_elementary_levels():
    search = LevelSearch(GroupSpec((4,)), ShortZerosum(), True)
    sizes = [len(level.multisets(GroupSpec((4,))))
             for level in search.levels()]
    assert sizes == [1, 3, 2]
    assert not search.symmetric
    assert search.maximal == []

def test_level_and_forms():
    search = LevelSearch(Z3_3, ShortZerosum(max_len=3), True)
    level = search.level(2)
    forms = level.forms(Z3_3)
    assert len(forms) == len(level) == 1
    assert sum(form.orbit_size() for form in forms) == 26 * 25 // 2 - 13
    assert search.level(20).members == {}

def test_jobs_do_not_change_results():
    one = LevelSearch(Z3_2, DisjointZerosums(2), False, jobs=1)
    two = LevelSearch(Z3_2, DisjointZerosums(2), False, jobs=2)
    levels_one = [level.keys() for level in one.levels()]
    levels_two = [level.keys() for level in two.levels()]
    assert levels_one == levels_two
    assert one.nodes == two.nodes

def test_budgets():
    with pytest.raises(BudgetExceeded) as e:
        LevelSearch(Z3_2, ShortZerosum(),
                    budget=config.Budget(node_limit=5)).last_level()
    assert e.value.budget == 'node_limit'
    with pytest.raises(BudgetExceeded) as e:
        LevelSearch(Z3_2, ShortZerosum(),
                    budget=config.Budget(max_size=2)).last_level()
    assert e.value.budget == 'max_size'
    with pytest.raises(BudgetExceeded):
        LevelSearch(GroupSpec((5, 25, 50)), ShortZerosum())

def test_small_table_entries():
    entries = [('D^k*', 5, 7), ('D^k', 5, 9), ('D*', None, 7)]
    rows = verify_table(entries=entries)
    assert [row['name'] for row in rows] == ['D^5*', 'D^5', 'D*']
    assert all(row['passed'] for row in rows), rows
    assert [row['published'] for row in rows] == [8, 9, 7]

def _has_short_zerosum(points, max_len):
    for n in range(1, max_len + 1):
        for chosen in itertools.combinations(points, n):
            if all(sum(column) % 3 == 0 for column in zip(*chosen)):
                return True
    return False

def test_seven_sets_have_short_zerosums():
    # a set without zero-sums of length 2 spans Z_3^3, so up to a linear
    # map it contains the standard basis
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    others = [v for v in itertools.product(range(3), repeat=3)
              if any(v) and v not in basis]
    for extra in itertools.combinations(others, 4):
        assert _has_short_zerosum(basis + list(extra), 4), extra

def test_table_entries():
    entries = table_entries()
    assert len(entries) == 13
    assert ('D_k', 5, 21) in entries
    assert ('D*', None, 7) in entries
    assert ('D', None, 7) not in entries
    assert entries.count(('D_k', 3, 15)) == 2
    for family, k, expected in entries:
        assert PUBLISHED_Z3_3.get((family, k), expected) >= expected

def test_maximal_zerosum_free_sets():
    forms = max_zerosum_free_supports(Z3_2, ZerosumQuery())
    assert forms
    for form in forms:
        A = form.representative
        assert A.is_set()
        assert find_zerosum(A) is None
        for x in range(1, Z3_2.order):
            if x not in A:
                assert find_zerosum(A.add(x)) is not None
    with pytest.raises(PreconditionError):
        max_zerosum_free_supports(GroupSpec((9,)), ZerosumQuery())

def test_catalog_witness_for_d2():
    from zerosum import catalog
    A = catalog.board('D_2')
    assert len(A) == 10
    assert not DisjointZerosums(2).has(A)

@slow
def test_full_table():
    rows = verify_table()
    assert all(row['passed'] for row in rows), rows

@slow
def test_d2_exhaustive():
    q = ConstantQuery(Z3_3, 'D_k', 2)
    assert compute_constant(q, exhaustive=True).value == 11
