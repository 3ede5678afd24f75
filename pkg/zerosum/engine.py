"""Zero-sum detection: shortest and longest zero-sum sub-multisets, maximum
packings of disjoint zero-sums and bounded representability.

Everything here works on (index, multiplicity) items and on boolean reach
tables, table[t][g] being True iff g is a sum of exactly t picks.
"""
from . import config, kernel
from .error import BudgetExceeded, SpecMismatchError
from .group import GroupMultiset, ZerosumCertificate, multiset_sum


class ZerosumQuery(object):
    """What counts as a hit: a sub-multiset summing to 'target' whose
    length lies in [min_len, max_len]; with 'distinct_only', each element is
    used at most once."""

    def __init__(self, target=None, min_len=None, max_len=None,
                 distinct_only=False):
        if min_len is not None and max_len is not None and min_len > max_len:
            raise ValueError("min_len %d > max_len %d" % (min_len, max_len))
        self.target = target
        self.min_len = min_len
        self.max_len = max_len
        self.distinct_only = distinct_only

    def target_index(self, spec):
        if self.target is None:
            return 0
        if self.target.spec != spec:
            raise SpecMismatchError("query target from another group",
                                    self.target.spec, spec)
        return self.target.index

    def __repr__(self):
        return ('ZerosumQuery(target=%r, min_len=%r, max_len=%r, '
                'distinct_only=%r)' % (self.target, self.min_len,
                                       self.max_len, self.distinct_only))

DEFAULT_QUERY = ZerosumQuery()


class PackingResult(object):
    def __init__(self, parts):
        self.parts = list(parts)
        self.count = len(self.parts)

    def __repr__(self):
        return '<PackingResult count=%d>' % (self.count,)


def _items(A, distinct_only=False):
    if distinct_only:
        return [(index, 1) for index, _ in A.index_items()]
    return list(A.index_items())

def _take(items, part):
    counts = dict(items)
    for index, mult in part:
        counts[index] -= mult
    return tuple((index, mult) for index, mult in sorted(counts.items())
                 if mult)

# ____________________________________________________________
# shortest hits with lexicographic tie-break

def find_zerosum(A, q=None):
    """Shortest sub-multiset of A matching the query, ties broken by the
    lexicographically least sorted index sequence; None if there is none."""
    if q is None:
        q = DEFAULT_QUERY
    spec = A.spec
    target = q.target_index(spec)
    items = _items(A, q.distinct_only)
    size = sum(mult for _, mult in items)
    lo = max(q.min_len or 1, 1)
    hi = size if q.max_len is None else min(q.max_len, size)
    if target == 0 and not q.distinct_only:
        # ord(x) copies of x are a zero-sum
        for index, mult in items:
            order = spec.element_order(index)
            if lo <= order <= min(mult, hi):
                hi = order
    if lo > hi:
        return None
    suffix = [None] * (len(items) + 1)
    suffix[len(items)] = kernel.new_reach_table(spec, hi)
    for i in range(len(items) - 1, -1, -1):
        table = suffix[i + 1].copy()
        x, copies = items[i]
        suffix[i] = kernel.extend_reach(spec, table, x, copies)
    for length in range(lo, hi + 1):
        if suffix[0][length, target]:
            break
    else:
        return None
    chosen = []
    g = target
    remaining = length
    for i, (x, copies) in enumerate(items):
        for take in range(min(copies, remaining), -1, -1):
            h = spec.add_index(g, spec.scale_index(x, -take))
            if suffix[i + 1][remaining - take, h]:
                break
        else:
            raise AssertionError("reach table inconsistent")
        if take:
            chosen.append((x, take))
        g = h
        remaining -= take
    assert remaining == 0 and g == 0
    return ZerosumCertificate(GroupMultiset(spec, chosen), A,
                              spec.from_index(target))

def min_zerosum_length(A):
    certificate = find_zerosum(A)
    if certificate is None:
        return None
    return len(certificate)

def longest_zerosum(A):
    """The longest zero-sum sub-multiset, found as the complement of the
    shortest selection summing to multiset_sum(A)."""
    if len(A) == 0:
        return None
    total = multiset_sum(A)
    if total.is_zero():
        return ZerosumCertificate(A, A)
    removed = find_zerosum(A, ZerosumQuery(target=total))
    if removed is None or len(removed) == len(A):
        return None
    return ZerosumCertificate(A - removed.sub, A)

def max_zerosum_length(A):
    certificate = longest_zerosum(A)
    if certificate is None:
        return None
    return len(certificate)

def has_zerosum(A, max_len=None):
    return find_zerosum(A, ZerosumQuery(max_len=max_len)) is not None

# ____________________________________________________________
# bounded representability

def representable_sums(A, max_picks):
    if max_picks < 0:
        raise ValueError("max_picks must be >= 0")
    spec = A.spec
    table = kernel.reach_table(spec, _items(A), max_picks)
    reached = table.any(axis=0).nonzero()[0]
    return frozenset(spec.from_index(int(index)) for index in reached)

# ____________________________________________________________
# listing

def all_zerosum_subsets(A, budget=None):
    budget = config.get_budget(budget)
    if len(A) > budget.zerosum_list_guard:
        raise BudgetExceeded('zerosum_list_guard', budget.zerosum_list_guard,
                             'multiset of size %d' % len(A))
    spec = A.spec
    items = _items(A)
    add = spec.add_index
    found = []
    chosen = []

    def visit(pos, total):
        if pos == len(items):
            if total == 0 and chosen:
                found.append(GroupMultiset(spec, chosen))
            return
        x, copies = items[pos]
        visit(pos + 1, total)
        for take in range(1, copies + 1):
            total = add(total, x)
            chosen.append((x, take))
            visit(pos + 1, total)
            chosen.pop()

    visit(0, 0)
    found.sort(key=lambda B: (len(B), B.indices()))
    return found

# ____________________________________________________________
# packings

class _Packer(object):
    """Depth-first extraction of minimal zero-sums, memoized on the
    remaining items.  With 'need', a branch stops as soon as that many parts
    are found; such truncated answers are never memoized."""

    def __init__(self, spec):
        self.add = spec.add_index
        self.memo = {}

    def minimal_zerosums(self, items):
        # minimal zero-sums containing the first item
        add = self.add
        results = []
        counts = [0] * len(items)

        def extend(pos, total, sums):
            for j in range(pos, len(items)):
                y, copies = items[j]
                if counts[j] >= copies:
                    continue
                new_total = add(total, y)
                counts[j] += 1
                if new_total == 0:
                    results.append(tuple((items[i][0], counts[i])
                                         for i in range(len(items))
                                         if counts[i]))
                else:
                    new_sums = set(sums)
                    new_sums.add(y)
                    new_sums.update([add(s, y) for s in sums])
                    if 0 not in new_sums:
                        extend(j, new_total, new_sums)
                counts[j] -= 1

        x = items[0][0]
        counts[0] = 1
        extend(0, x, frozenset([x]))
        return results

    def solve(self, items, need=None):
        if not items or (need is not None and need <= 0):
            return 0, ()
        hit = self.memo.get(items)
        if hit is not None:
            return hit
        sub_need = None if need is None else need - 1
        x, copies = items[0]
        if x == 0:
            count, parts = self.solve(_take(items, ((0, 1),)), sub_need)
            result = (count + 1, (((0, 1),),) + parts)
        else:
            result = self.solve(items[1:], need)
            bound = sum(mult for _, mult in items) // 2
            if result[0] < bound and (need is None or result[0] < need):
                for part in self.minimal_zerosums(items):
                    count, parts = self.solve(_take(items, part), sub_need)
                    if count + 1 > result[0]:
                        result = (count + 1, (part,) + parts)
                        if result[0] == bound:
                            break
                        if need is not None and result[0] >= need:
                            break
        if need is None or result[0] < need:
            self.memo[items] = result
        return result


def max_disjoint_zerosums(A, at_least=None, budget=None):
    """Maximum number of pairwise disjoint non-empty zero-sum sub-multisets.

    With 'at_least', the search may stop once that many parts are found, so
    the count is exact only when it is below 'at_least'.
    """
    budget = config.get_budget(budget)
    if len(A) > budget.packing_guard:
        raise BudgetExceeded('packing_guard', budget.packing_guard,
                             'multiset of size %d' % len(A))
    spec = A.spec
    count, parts = _Packer(spec).solve(tuple(A.index_items()), at_least)
    return PackingResult(ZerosumCertificate(GroupMultiset(spec, part), A)
                         for part in parts)

def packing_number(A, at_least=None, budget=None):
    return max_disjoint_zerosums(A, at_least, budget).count
