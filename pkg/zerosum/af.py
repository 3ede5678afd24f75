"""Non-existence of labelings f: A -> Z_n (n coprime to 6) of a ten-element
multiset A over Z_3^3 without two disjoint zero-sums, such that every
zero-sum subset has labels adding up to 1 and 3 f(a) = 1 for some a.

Each candidate A and anchor a give an integer system M f = 1; its Smith
form shows that it is solvable modulo finitely many primes only, all of
them 2 or 3.
"""
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor

from . import catalog, config
from .boards import Z3_3
from .engine import (ZerosumQuery, all_zerosum_subsets, find_zerosum,
                     max_zerosum_length, packing_number)
from .error import PreconditionError, TheoremViolation
from .group import GroupMultiset, lift
from .intlinalg import IntMatrix, rank_mod_p, solvable_coprime_to
from .progress import track
from .search import AnyOf, DisjointZerosums, LevelSearch, ShortZerosum
from .symmetry import apply_map, canonical_form, coordinate_permutations

log = logging.getLogger(__name__)

FILTERS = ('case_viii', 'full')


class AfCandidate(object):
    def __init__(self, A, zerosum_subsets=None):
        self.A = A
        if zerosum_subsets is None:
            zerosum_subsets = all_zerosum_subsets(A)
        self.zerosum_subsets = zerosum_subsets

    def problems(self):
        """What keeps A from being a candidate (empty if nothing)."""
        A = self.A
        result = []
        if len(A) != 10:
            result.append("size %d" % len(A))
        if find_zerosum(A, ZerosumQuery(max_len=3)) is not None:
            result.append("zero-sum of length <= 3")
        if (max_zerosum_length(A) or 0) >= 8:
            result.append("zero-sum of length >= 8")
        if packing_number(A, at_least=2) >= 2:
            result.append("two disjoint zero-sums")
        return result

    def __repr__(self):
        return '<AfCandidate %r>' % (self.A,)


class AfSystem(object):
    """One unknown per support element; one row per zero-sum subset
    (coefficients are multiplicities) plus the anchor row 3 f(a) = 1."""

    def __init__(self, variables, rows, anchor):
        self.variables = variables
        self.rows = rows
        self.anchor = anchor
        self.M = IntMatrix(rows, len(variables))
        self.c = [1] * len(rows)

    def without_row(self, i):
        rows = self.rows[:i] + self.rows[i + 1:]
        return AfSystem(self.variables, rows, self.anchor)

    def verdict(self):
        return solvable_coprime_to(self.M, self.c, (2, 3))

    def __repr__(self):
        return '<AfSystem %d x %d anchor=%r>' % (len(self.rows),
                                                 len(self.variables),
                                                 self.anchor)


def _row(columns, B):
    row = [0] * len(columns)
    for index, mult in B.index_items():
        row[columns[index]] = mult
    return row

def build_system(cand, anchor):
    A = cand.A
    anchor_index = A.spec.coerce(anchor)
    if anchor_index not in A:
        raise PreconditionError("anchor %r is not in the candidate"
                                % (anchor,))
    variables = [index for index, _ in A.index_items()]
    columns = dict((index, j) for j, index in enumerate(variables))
    rows = [_row(columns, B) for B in cand.zerosum_subsets]
    anchor_row = [0] * len(variables)
    anchor_row[columns[anchor_index]] = 3
    rows.append(anchor_row)
    return AfSystem([A.spec.from_index(i) for i in variables], rows,
                    A.spec.from_index(anchor_index))

def brute_force_labeling(system, p):
    """Some f with M f = c mod p found by backtracking, or None."""
    n = len(system.variables)
    by_last = [[] for _ in range(n)]
    for row, value in zip(system.rows, system.c):
        used = [j for j, a in enumerate(row) if a]
        if not used:
            if value % p:
                return None
            continue
        by_last[used[-1]].append((row, value))
    f = [0] * n

    def assign(j):
        if j == n:
            return True
        for value in range(p):
            f[j] = value
            for row, rhs in by_last[j]:
                total = sum(a * b for a, b in zip(row[:j + 1], f))
                if (total - rhs) % p:
                    break
            else:
                if assign(j + 1):
                    return True
        return False

    if assign(0):
        return list(f)
    return None

# ____________________________________________________________
# candidates

def case_viii_configurations():
    """Ten-element multisets with the standard basis taken twice and four
    more distinct points, without a zero-sum of length <= 3 or >= 8."""
    doubled = [Z3_3.coerce(x) for x in catalog.CASE_VIII_DOUBLED]
    others = [i for i in range(1, Z3_3.order) if i not in doubled]
    base = GroupMultiset(Z3_3, [(i, 2) for i in doubled])
    found = []
    for quadruple in itertools.combinations(others, 4):
        A = base + GroupMultiset.from_indices(Z3_3, quadruple)
        if find_zerosum(A, ZerosumQuery(max_len=3)) is not None:
            continue
        if (max_zerosum_length(A) or 0) >= 8:
            continue
        found.append(A)
    return found

def _orbit_count(configurations, maps):
    keys = set()
    for A in configurations:
        keys.add(min(apply_map(m, A).vector() for m in maps))
    return len(keys)

def rotate_to_marked(configurations, marked=(0, 1, 1)):
    """Rotate every configuration around the spatial diagonal so that it
    contains 'marked'.  Returns the distinct rotated configurations and
    the number of inputs with no rotation containing 'marked'."""
    marked = Z3_3.coerce(marked)
    cycle = coordinate_permutations(3, 3, True)
    rotated = set()
    missed = 0
    for A in configurations:
        images = [apply_map(m, A) for m in cycle]
        hits = [B for B in images if marked in B]
        if not hits:
            missed += 1
        rotated.update(hits)
    return rotated, missed

def unlisted_case_viii_orbits(configurations=None):
    """Canonical keys of the orbits with no printed quadruple."""
    if configurations is None:
        configurations = case_viii_configurations()
    keys = set(canonical_form(A).key for A in configurations)
    for quadruple in catalog.CASE_VIII_QUADRUPLES:
        A = catalog.case_viii_configuration(quadruple)
        keys.discard(canonical_form(A).key)
    return sorted(keys)

def count_case_viii(configurations=None):
    if configurations is None:
        configurations = case_viii_configurations()
    rotated, missed = rotate_to_marked(configurations)
    counts = {
        'raw': len(configurations),
        'rotated': len(rotated),
        'without_pair_sum': missed,
        'c3_orbits': _orbit_count(configurations,
                                  coordinate_permutations(3, 3, True)),
        's3_orbits': _orbit_count(configurations,
                                  coordinate_permutations(3, 3)),
        'orbits': len(set(canonical_form(A).key for A in configurations)),
    }
    log.info("case (viii) configurations: %r", counts)
    for key, printed in sorted(catalog.CASE_VIII_PUBLISHED.items()):
        if counts[key] != printed:
            log.info("case (viii) %s: enumerated %d, printed %d",
                     key, counts[key], printed)
    return counts

def enumerate_af_candidates(filter='case_viii', budget=None, jobs=None,
                            progress=False):
    if filter == 'case_viii':
        seen = {}
        for A in case_viii_configurations():
            form = canonical_form(A, budget)
            if form.key in seen:
                seen[form.key].encountered += 1
            else:
                seen[form.key] = form
        return [seen[key] for key in sorted(seen)]
    if filter == 'full':
        prop = AnyOf(ShortZerosum(max_len=3), DisjointZerosums(2))
        search = LevelSearch(Z3_3, prop, False, budget, jobs, progress)
        forms = search.level(10).forms(Z3_3)
        return [form for form in forms
                if (max_zerosum_length(form.representative) or 0) < 8]
    raise ValueError("unknown filter %r (choose from %s)"
                     % (filter, ', '.join(FILTERS)))

# ____________________________________________________________
# verification

def _verify_one(vector):
    """Verdicts for every anchor of one candidate."""
    A = GroupMultiset.from_vector(Z3_3, vector)
    cand = AfCandidate(A)
    anchors = []
    violations = []
    for anchor in A.support():
        system = build_system(cand, anchor)
        verdict = system.verdict()
        record = {'anchor': list(anchor.coords),
                  'certificate': verdict.certificate,
                  'obstruction_primes': verdict.obstruction_primes}
        anchors.append(record)
        if verdict.feasible:
            p = verdict.witness_prime()
            violations.append({'A': repr(A), 'anchor': repr(anchor),
                               'n': p, 'f': verdict.solve_mod(p)})
    return {'candidate': [list(x.coords) for x in A],
            'zerosums': len(cand.zerosum_subsets),
            'anchors': anchors}, violations

def verify_af_theorem(filter='case_viii', budget=None, jobs=None,
                      progress=False, strict=True, candidates=None):
    """Check every candidate and anchor.  A solvable system raises
    TheoremViolation, or with strict=False is listed under 'violations'."""
    budget = config.get_budget(budget)
    jobs = jobs or budget.jobs
    start = time.time()
    report = {'filter': filter}
    if candidates is None:
        if filter == 'case_viii':
            candidates = case_viii_configurations()
            report['counts'] = count_case_viii(candidates)
        else:
            candidates = [form.representative for form in
                          enumerate_af_candidates(filter, budget, jobs,
                                                  progress)]
    vectors = [A.vector() for A in candidates]
    if jobs > 1:
        executor = ProcessPoolExecutor(max_workers=jobs)
        try:
            results = list(track(executor.map(_verify_one, vectors,
                                              chunksize=8),
                                 len(vectors), 'af', progress))
        finally:
            executor.shutdown()
    else:
        results = list(track(map(_verify_one, vectors), len(vectors), 'af',
                             progress))
    certificates = []
    violations = []
    for record, found in results:
        certificates.append(record)
        violations.extend(found)
    if violations and strict:
        raise TheoremViolation("labeling exists for %s" % violations[0]['A'],
                               violations[0])
    report['candidates'] = len(candidates)
    report['systems'] = sum(len(record['anchors']) for record in certificates)
    report['violations'] = violations
    report['certificates'] = certificates
    report['wall_ms'] = int((time.time() - start) * 1000)
    log.info("%s: %d candidates, %d systems, %d violations", filter,
             report['candidates'], report['systems'], len(violations))
    return report

# ____________________________________________________________
# bracket coefficients

def bracket_value(name, a):
    """The expressions of catalog.BRACKET_TABLES evaluated with lifts."""
    L = lambda v: lift(v, 3)
    if name == '(1-[-a]+[-1-a])/3':
        numerator = 1 - L(-a) + L(-1 - a)
    elif name == '(2-[-a]+[-2-a])/3':
        numerator = 2 - L(-a) + L(-2 - a)
    elif name == '(2+[-a]-[-1-a])/3':
        numerator = 2 + L(-a) - L(-1 - a)
    else:
        raise KeyError(name)
    if numerator % 3:
        raise ArithmeticError("%s is not integral at a=%d" % (name, a))
    return numerator // 3

T1 = '(1-[-a]+[-1-a])/3'
T2 = '(2-[-a]+[-2-a])/3'

def _sum3(u, v):
    return tuple((a + b) % 3 for a, b in zip(u, v))

def _case_points(once):
    return [tuple(once[0]), tuple(once[1]), _sum3(once[0], once[1])]

def case_vi_matrix(once):
    rows = []
    for point in _case_points(once):
        for name in (T1, T2):
            rows.append([bracket_value(name, a) for a in point])
    return rows

def bracket_coefficient_tables(primes=(5, 7, 11, 13)):
    tables = {}
    tables_match = True
    for name, expected in sorted(catalog.BRACKET_TABLES.items()):
        values = dict((a, bracket_value(name, a)) for a in range(3))
        tables[name] = values
        tables_match = tables_match and values == expected
    matrices = []
    for once, expected in catalog.CASE_VI:
        rows = case_vi_matrix(once)
        ranks = dict((p, rank_mod_p(IntMatrix(rows, 3), p)) for p in primes)
        matrices.append({'once': [list(x) for x in once], 'matrix': rows,
                         'matches': rows == expected, 'ranks': ranks})
    passed = tables_match and all(m['matches'] and
                                  all(r == 3 for r in m['ranks'].values())
                                  for m in matrices)
    return {'tables': tables, 'tables_match': tables_match,
            'matrices': matrices, 'passed': passed}

def bracket_rows_match(once):
    """Rebuild the zero-sums behind the case-(vi) equations from the
    configuration and check that the matching row combinations are 3 times
    the bracket coefficients."""
    A = catalog.case_vi_configuration(once)
    cand = AfCandidate(A)
    known = set(cand.zerosum_subsets)
    columns = dict((index, j) for j, (index, _) in
                   enumerate(A.index_items()))
    x, y, z, w = [Z3_3.coerce(v) for v in
                  (catalog.X, catalog.Y, catalog.Z, catalog.W)]

    def row(counts):
        B = GroupMultiset(Z3_3, counts)
        if B not in known:
            raise TheoremViolation("%r is not a zero-sum of %r" % (B, A))
        return _row(columns, B)

    swap = [a - b for a, b in zip(row([(x, 2), (y, 2), (z, 2), (w, 1)]),
                                  row([(x, 1), (y, 1), (z, 1), (w, 2)]))]
    singles = [Z3_3.coerce(v) for v in once]
    for point, parts in zip(_case_points(once),
                            [[singles[0]], [singles[1]], singles]):
        r, s, t = point
        head = [(part, 1) for part in parts]

        def tail(shift):
            return [(z, lift(-shift - r, 3)), (y, lift(-shift - s, 3)),
                    (x, lift(-shift - t, 3))]

        base = row(head + tail(0))
        for times, name in ((1, T1), (2, T2)):
            other = row(head + [(w, times)] + tail(times))
            combo = [o - b + times * d for o, b, d in zip(other, base, swap)]
            expected = [0] * len(columns)
            for target, a in ((z, r), (y, s), (x, t)):
                expected[columns[target]] = 3 * bracket_value(name, a)
            if combo != expected:
                return False
    return True
