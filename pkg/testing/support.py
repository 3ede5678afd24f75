"""Slow, obviously-correct reference answers and random inputs for the
tests."""
import itertools
import os
import random

import pytest

from zerosum.group import GroupMultiset

__all__ = ['slow', 'selections', 'naive_zerosum_lengths', 'naive_packing',
           'naive_constant', 'random_multiset', 'random_matrix', 'rng']

slow = pytest.mark.skipif(not os.environ.get('ZEROSUM_SLOW_TESTS'),
                          reason="set ZEROSUM_SLOW_TESTS=1 to run")


def rng(seed=0):
    return random.Random(seed)


def selections(A):
    """Yield (length, sum index, counts) for every non-empty selection."""
    spec = A.spec
    items = A.index_items()
    for takes in itertools.product(*[range(mult + 1) for _, mult in items]):
        length = sum(takes)
        if not length:
            continue
        total = 0
        for (x, _), take in zip(items, takes):
            total = spec.add_index(total, spec.scale_index(x, take))
        yield length, total, takes

def naive_zerosum_lengths(A):
    return sorted(set(length for length, total, _ in selections(A)
                      if total == 0))

def naive_packing(A, _memo=None):
    if _memo is None:
        _memo = {}
    if A in _memo:
        return _memo[A]
    best = 0
    items = A.index_items()
    for length, total, takes in selections(A):
        if total:
            continue
        part = GroupMultiset(A.spec, [(x, take) for (x, _), take
                                      in zip(items, takes)])
        best = max(best, 1 + naive_packing(A - part, _memo))
    _memo[A] = best
    return best

def naive_constant(spec, has, distinct=False, limit=20):
    """Least n such that every multiset (set, with 'distinct') of size n
    over 'spec' satisfies 'has'."""
    pick = (itertools.combinations if distinct
            else itertools.combinations_with_replacement)
    for n in range(1, limit + 1):
        if all(has(GroupMultiset.from_indices(spec, indices))
               for indices in pick(range(spec.order), n)):
            return n
    raise AssertionError("no constant below %d" % (limit,))


def random_multiset(spec, size, r, max_mult=None):
    counts = {}
    while sum(counts.values()) < size:
        x = r.randrange(spec.order)
        if max_mult is not None and counts.get(x, 0) >= max_mult:
            continue
        counts[x] = counts.get(x, 0) + 1
    return GroupMultiset(spec, counts)

def random_matrix(rank, p, r):
    return [[r.randrange(p) for _ in range(rank)] for _ in range(rank)]
