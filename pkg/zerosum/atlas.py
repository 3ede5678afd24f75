"""Structure of small configurations in Z_3^3 without short zero-sums,
and the multisets of size 3k+5 without k disjoint zero-sums."""
import itertools
import logging

from .boards import Z3_3
from .engine import (ZerosumQuery, find_zerosum, max_zerosum_length,
                     packing_number)
from .error import TheoremViolation
from .group import GroupMultiset
from .search import AnyOf, DisjointZerosums, LevelSearch, ShortZerosum
from .symmetry import orbit_dedupe

log = logging.getLogger(__name__)

# ____________________________________________________________
# sets of distinct points

def has_sum_triple(A):
    """Three distinct elements x, y, z of A with x + y = z."""
    spec = A.spec
    support = [index for index, _ in A.index_items()]
    present = set(support)
    for x, y in itertools.combinations(support, 2):
        z = spec.add_index(x, y)
        if z in present and z != x and z != y:
            return True
    return False

def has_affine_line(A):
    """Three distinct elements on a line of F_3^3, i.e. summing to 0."""
    spec = A.spec
    support = [index for index, _ in A.index_items()]
    present = set(support)
    for x, y in itertools.combinations(support, 2):
        z = spec.neg_index(spec.add_index(x, y))
        if z in present and z > y:
            return True
    return False

def is_cap(A):
    return A.is_set() and not has_affine_line(A)

def _short_zerosum_in_set(spec, indices):
    present = set(indices)
    if 0 in present:
        return True
    for x in indices:
        if spec.neg_index(x) in present:
            return True
    return has_affine_line(GroupMultiset.from_indices(spec, indices))

def classify_distinct_sets(size, budget=None, jobs=None, progress=False):
    """Orbits of sets of 'size' distinct points without a zero-sum of
    length <= 3."""
    search = LevelSearch(Z3_3, ShortZerosum(max_len=3), True, budget, jobs,
                         progress)
    return search.level(size).forms(Z3_3)

def check_five_point_lemma():
    """Every 5 distinct points contain a zero-sum of length <= 3 or
    satisfy x + y = z."""
    checked = 0
    violators = []
    for indices in itertools.combinations(range(Z3_3.order), 5):
        checked += 1
        if _short_zerosum_in_set(Z3_3, indices):
            continue
        if has_sum_triple(GroupMultiset.from_indices(Z3_3, indices)):
            continue
        violators.append(GroupMultiset.from_indices(Z3_3, indices))
    log.info("five-point check: %d sets, %d violators", checked,
             len(violators))
    return {'checked': checked, 'violators': violators}

# ____________________________________________________________
# 14 points

# which 14-element multisets count as extremal:
#   'literal'   no zero-sum of length <= 3 or >= 12
#   'long'      no zero-sum of length <= 3 or >= 13
#   'disjoint'  no zero-sum of length <= 3 and no 3 disjoint zero-sums
# No multiset meets the literal reading. Eight distinct points reach
# lengths 12 or 13 directly; for 7 doubled points B with sum t, avoiding
# lengths >= 12 makes B + {t} an 8-point set without short zero-sums,
# whose sum 2t must then vanish.
READINGS = ('literal', 'long', 'disjoint')

def _check_reading(reading):
    if reading not in READINGS:
        raise ValueError("unknown reading %r (choose from %s)"
                         % (reading, ', '.join(READINGS)))

def classify_14_point(reading='disjoint', budget=None, jobs=None,
                      progress=False):
    """Orbits of 14-element multisets that are extremal in the given
    reading."""
    _check_reading(reading)
    if reading == 'disjoint':
        prop = AnyOf(ShortZerosum(max_len=3), DisjointZerosums(3))
    else:
        prop = ShortZerosum(max_len=3)
    search = LevelSearch(Z3_3, prop, False, budget, jobs, progress)
    forms = search.level(14).forms(Z3_3)
    if reading != 'disjoint':
        limit = 12 if reading == 'literal' else 13
        forms = [form for form in forms
                 if (max_zerosum_length(form.representative) or 0) < limit]
    if not forms:
        log.warning("no 14-element multiset in the %s reading", reading)
    return forms

# ____________________________________________________________
# size 3k+5

class FamilyRecipe(object):
    """A 7-point set B taken twice, plus 3*kappas[i] more copies of its
    i-th point (points in index order)."""

    def __init__(self, base, kappas):
        if len(base) != 7 or not base.is_set():
            raise ValueError("base must be a set of 7 distinct points")
        if len(kappas) != 7 or min(kappas) < 0:
            raise ValueError("kappas must be 7 non-negative integers")
        self.base = base
        self.kappas = tuple(kappas)

    @property
    def k(self):
        return sum(self.kappas) + 3

    def doubled(self):
        return self.base + self.base

    def assembled(self):
        extra = [(index, 3 * kappa)
                 for index, kappa in zip(self.base.support(), self.kappas)]
        return self.doubled() + GroupMultiset(self.base.spec, extra)

    def __repr__(self):
        return '<FamilyRecipe %r kappas=%r>' % (self.base, self.kappas)


def compositions(total, parts):
    """Ordered tuples of 'parts' non-negative integers adding up to
    'total'."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        previous = -1
        result = []
        for bar in bars + (total + parts - 1,):
            result.append(bar - previous - 1)
            previous = bar
        yield tuple(result)

_bases = {}

def _is_base(B, reading):
    C = B + B
    if reading == 'disjoint':
        return packing_number(C, at_least=3) < 3
    limit = 12 if reading == 'literal' else 13
    return (max_zerosum_length(C) or 0) < limit

def family_bases(reading='disjoint', budget=None):
    """Orbits of 7-point sets without a zero-sum of length <= 3 whose
    doubling is a 14-point multiset of the given reading."""
    _check_reading(reading)
    if reading not in _bases:
        forms = classify_distinct_sets(7, budget)
        bases = [form.representative for form in forms
                 if _is_base(form.representative, reading)]
        log.info("%d of %d 7-point orbits are bases in the %s reading",
                 len(bases), len(forms), reading)
        _bases[reading] = bases
    return _bases[reading]

def check_recipe(recipe):
    A = recipe.assembled()
    k = recipe.k
    if len(A) != 3 * k + 5:
        return "size %d" % len(A)
    if find_zerosum(A, ZerosumQuery(max_len=2)) is not None:
        return "zero-sum of length <= 2"
    if packing_number(A, at_least=k) >= k:
        return "%d disjoint zero-sums" % k
    return None

def build_3k5_family(k, verify=True, budget=None, reading='disjoint'):
    if k < 3:
        raise ValueError("k must be >= 3")
    bases = family_bases(reading, budget)
    if not bases:
        raise TheoremViolation("no 7-point base in the %s reading" % reading,
                               {'k': k, 'reading': reading})
    for base in bases:
        for kappas in compositions(k - 3, 7):
            recipe = FamilyRecipe(base, kappas)
            if verify:
                problem = check_recipe(recipe)
                if problem is not None:
                    raise TheoremViolation(
                        "assembled multiset fails: %s" % problem,
                        {'base': repr(base), 'kappas': kappas,
                         'assembled': repr(recipe.assembled())})
            yield recipe

def assembled_orbits(k, budget=None, reading='disjoint'):
    if not family_bases(reading, budget):
        return []
    return orbit_dedupe((recipe.assembled() for recipe in
                         build_3k5_family(k, budget=budget, reading=reading)),
                        budget)

def verify_3k5_completeness(k, threshold=None, budget=None, jobs=None,
                            progress=False, reading='disjoint'):
    """Search all multisets of size 3k+5 without 'threshold' (default k)
    disjoint zero-sums and compare them with the assembled family."""
    if threshold is None:
        threshold = k
    size = 3 * k + 5
    prop = ShortZerosum() if threshold == 1 else DisjointZerosums(threshold)
    search = LevelSearch(Z3_3, prop, False, budget, jobs, progress)
    found = search.level(size).forms(Z3_3)
    expected = set(form.key for form in assembled_orbits(k, budget, reading))
    unmatched = [form.representative for form in found
                 if form.key not in expected]
    missing = len(expected - set(form.key for form in found))
    return {'k': k, 'threshold': threshold, 'size': size,
            'reading': reading,
            'bases': len(family_bases(reading, budget)),
            'found': len(found), 'recipe_orbits': len(expected),
            'unmatched': unmatched, 'missing': missing,
            'nodes': search.nodes,
            'complete': not unmatched and (threshold != k or not missing)}
