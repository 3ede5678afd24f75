import pytest
import numpy as np

from zerosum import kernel
from zerosum.group import GroupSpec
from zerosum.symmetry import gl_table
from testing.support import rng, random_multiset, selections


def test_new_reach_table():
    table = kernel.new_reach_table(GroupSpec((3, 3)), 4)
    assert table.shape == (5, 9)
    assert table.sum() == 1
    assert table[0, 0]

def test_reach_table_numpy():
    r = rng(13)
    for spec in (GroupSpec((3, 3)), GroupSpec((2, 6)), GroupSpec((7,))):
        for _ in range(20):
            A = random_multiset(spec, 6, r)
            table = kernel.reach_table(spec, A.index_items(), 4, use_c=False)
            expected = np.zeros_like(table)
            expected[0, 0] = True
            for length, total, _ in selections(A):
                if length <= 4:
                    expected[length, total] = True
            assert (table == expected).all()

def test_extend_reach_noop():
    spec = GroupSpec((5,))
    table = kernel.new_reach_table(spec, 3)
    assert kernel.extend_reach(spec, table, 1, 0, use_c=False) is table
    assert table.sum() == 1

def test_lexmin_image_numpy():
    spec = GroupSpec((3, 3))
    table = gl_table(spec)
    r = rng(14)
    for _ in range(30):
        mult = np.array([r.randrange(3) for _ in range(9)], dtype=np.uint8)
        images = [tuple(int(mult[i]) for i in row) for row in table.inverse]
        best = min(images)
        assert kernel.lexmin_image(table.inverse, mult, use_c=False) == \
            (best, images.count(best))

def test_missing_kernel_warns(monkeypatch):
    monkeypatch.setattr(kernel, 'lib', None)
    spec = GroupSpec((3, 3))
    with pytest.warns(UserWarning, match="not available"):
        table = kernel.reach_table(spec, [(1, 2)], 2, use_c=True)
    assert table[2, spec.add_index(1, 1)]
