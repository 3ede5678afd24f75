import pytest

from zerosum.error import NotElementaryError, SpecMismatchError
from zerosum.group import GroupSpec, GroupMultiset
from zerosum.symmetry import (gl_order, LinearMap, enumerate_gl, gl_table,
                              coordinate_cycle, coordinate_permutations,
                              apply_map, orbit, canonical_form, orbit_dedupe)
from zerosum.engine import (min_zerosum_length, max_zerosum_length,
                            packing_number)
from testing.support import rng, random_multiset, random_matrix

Z3_2 = GroupSpec((3, 3))
Z3_3 = GroupSpec((3, 3, 3))


def random_map(rank, p, r):
    while True:
        try:
            return LinearMap(random_matrix(rank, p, r), p)
        except ValueError:
            pass


def test_gl_order():
    assert gl_order(1, 3) == 2
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(3, 3) == 11232

def test_enumerate_gl():
    maps = enumerate_gl(2, 3)
    assert len(maps) == 48
    assert len(set(maps)) == 48
    assert len(enumerate_gl(3, 2)) == gl_order(3, 2)

def test_linear_map_checks():
    with pytest.raises(ValueError):
        LinearMap([[1, 2], [2, 4]], 3)
    with pytest.raises(ValueError):
        LinearMap([[1, 0, 0], [0, 1, 0]], 3)
    m = LinearMap([[4, 0], [0, -1]], 3)
    assert m.matrix == ((1, 0), (0, 2))
    assert m.spec() == Z3_2

def test_compose_matches_permutations():
    r = rng(4)
    for _ in range(20):
        f = random_map(3, 3, r)
        g = random_map(3, 3, r)
        fg = f.compose(g).permutation()
        pf, pg = f.permutation(), g.permutation()
        assert all(fg[x] == pf[pg[x]] for x in range(27))

def test_coordinate_maps():
    cycle = coordinate_cycle(3, 3)
    assert cycle.apply_coords((1, 0, 0)) == (0, 1, 0)
    assert cycle.apply_coords((0, 0, 1)) == (1, 0, 0)
    assert len(coordinate_permutations(3, 3)) == 6
    shifts = coordinate_permutations(3, 3, cyclic=True)
    assert len(shifts) == 3
    assert cycle in shifts

def test_gl_table_permutations():
    table = gl_table(Z3_2)
    assert len(table) == 48
    for g in range(len(table)):
        perm = table.perms[g]
        assert perm[0] == 0
        assert sorted(perm.tolist()) == list(range(9))
        assert all(table.inverse[g][perm[x]] == x for x in range(9))
    assert gl_table(Z3_2) is table

def test_not_elementary():
    A = GroupMultiset.from_indices(GroupSpec((9,)), [1, 2])
    with pytest.raises(NotElementaryError):
        canonical_form(A)
    with pytest.raises(NotElementaryError):
        gl_table(GroupSpec((3, 9)))

def test_apply_map_mismatch():
    A = GroupMultiset.from_indices(Z3_2, [1])
    with pytest.raises(SpecMismatchError):
        apply_map(LinearMap([[1]], 3), A)

def test_canonical_form_is_invariant():
    r = rng(5)
    for spec in (Z3_2, Z3_3):
        for _ in range(15):
            A = random_multiset(spec, 6, r, max_mult=2)
            form = canonical_form(A)
            m = random_map(spec.rank, 3, r)
            image = apply_map(m, A)
            assert len(image) == len(A)
            assert canonical_form(image) == form
            assert form.representative.vector() <= A.vector()

def test_canonical_form_under_many_maps():
    r = rng(9)
    for spec in (Z3_2, Z3_3):
        for _ in range(4):
            A = random_multiset(spec, 7, r, max_mult=3)
            key = canonical_form(A).key
            lengths = (min_zerosum_length(A), max_zerosum_length(A))
            packing = packing_number(A)
            for _ in range(100):
                image = apply_map(random_map(spec.rank, 3, r), A)
                assert canonical_form(image).key == key
                assert (min_zerosum_length(image),
                        max_zerosum_length(image)) == lengths
                assert packing_number(image) == packing

def test_orbit_size():
    r = rng(6)
    for _ in range(10):
        A = random_multiset(Z3_2, 4, r)
        form = canonical_form(A)
        assert len(orbit(A)) == form.orbit_size()
        assert form.stabilizer_size * form.orbit_size() == 48

def test_orbit_dedupe_pairs():
    nonzero = range(1, 9)
    pairs = [GroupMultiset.from_indices(Z3_2, [a, b])
             for a in nonzero for b in nonzero if a < b]
    forms = orbit_dedupe(pairs)
    assert sorted(form.encountered for form in forms) == [4, 24]
    for form in forms:
        assert form.orbit_size() == form.encountered
    assert [form.key for form in forms] == sorted(form.key for form in forms)
