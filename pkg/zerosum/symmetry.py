"""The action of GL(r, p) on multisets over (Z_p)^r.

Two multisets are linearly equivalent when an invertible linear map sends
one to the other.  canonical_form() picks the orbit representative whose
multiplicity vector, indexed by element index, is lexicographically least.
"""
import itertools
import logging

import numpy as np

from . import config, kernel
from .error import BudgetExceeded, NotElementaryError, SpecMismatchError
from .group import GroupSpec, GroupMultiset
from .intlinalg import IntMatrix, rank_mod_p

log = logging.getLogger(__name__)


def gl_order(r, p):
    order = 1
    for i in range(r):
        order *= p ** r - p ** i
    return order


class LinearMap(object):
    __slots__ = ('matrix', 'p')

    def __init__(self, matrix, p):
        matrix = tuple(tuple(int(a) % p for a in row) for row in matrix)
        r = len(matrix)
        if any(len(row) != r for row in matrix):
            raise ValueError("matrix %r is not square" % (matrix,))
        if rank_mod_p(IntMatrix(matrix, r), p) != r:
            raise ValueError("matrix %r is not invertible mod %d"
                             % (matrix, p))
        self.matrix = matrix
        self.p = p

    @property
    def r(self):
        return len(self.matrix)

    def spec(self):
        return GroupSpec((self.p,) * self.r)

    def apply_coords(self, coords):
        p = self.p
        return tuple(sum(a * c for a, c in zip(row, coords)) % p
                     for row in self.matrix)

    def permutation(self):
        spec = self.spec()
        return tuple(spec.index_of(self.apply_coords(spec.coords_of(i)))
                     for i in range(spec.order))

    def compose(self, other):
        """self after other"""
        p = self.p
        cols = list(zip(*other.matrix))
        return LinearMap([[sum(a * b for a, b in zip(row, col)) % p
                           for col in cols] for row in self.matrix], p)

    def __eq__(self, other):
        return (isinstance(other, LinearMap) and self.p == other.p and
                self.matrix == other.matrix)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.p, self.matrix))

    def __repr__(self):
        return 'LinearMap(%r, p=%d)' % (self.matrix, self.p)


def _span(columns, p, r):
    span = set([(0,) * r])
    for col in columns:
        span = set(tuple((s + k * c) % p for s, c in zip(vec, col))
                   for vec in span for k in range(p))
    return span

def enumerate_gl(r, p, budget=None):
    """All invertible r x r matrices mod p, each once, built column by column
    with every new column outside the span of the previous ones."""
    budget = config.get_budget(budget)
    if p ** r > budget.max_order:
        raise BudgetExceeded('max_order', budget.max_order,
                             'GL(%d, %d) acts on %d points' % (r, p, p ** r))
    if gl_order(r, p) > budget.gl_limit:
        raise BudgetExceeded('gl_limit', budget.gl_limit,
                             '|GL(%d, %d)| = %d' % (r, p, gl_order(r, p)))
    vectors = list(itertools.product(range(p), repeat=r))
    maps = []

    def extend(columns):
        if len(columns) == r:
            maps.append(LinearMap(zip(*columns), p))
            return
        span = _span(columns, p, r)
        for vec in vectors:
            if vec not in span:
                columns.append(vec)
                extend(columns)
                columns.pop()

    extend([])
    return maps


def coordinate_cycle(r, p):
    """e_i -> e_{i+1}; for r = 3 the rotation around the spatial diagonal"""
    matrix = [[0] * r for _ in range(r)]
    for i in range(r):
        matrix[(i + 1) % r][i] = 1
    return LinearMap(matrix, p)

def coordinate_permutations(r, p, cyclic=False):
    """The permutation matrices (only the cyclic shifts with 'cyclic')."""
    if cyclic:
        shifts = [tuple((i + k) % r for i in range(r)) for k in range(r)]
    else:
        shifts = list(itertools.permutations(range(r)))
    maps = []
    for perm in shifts:
        matrix = [[0] * r for _ in range(r)]
        for i, j in enumerate(perm):
            matrix[j][i] = 1
        maps.append(LinearMap(matrix, p))
    return maps

# ____________________________________________________________

def _check_elementary(spec):
    p = spec.elementary_prime()
    if p is None:
        raise NotElementaryError("%r is not elementary abelian" % (spec,))
    return p


class GLTable(object):
    """The maps of GL(r, p) with their permutations of the group elements.
    perms[g][x] is the index of g(x), inverse[g][y] the index of g^-1(y)."""

    def __init__(self, spec, maps=None, budget=None):
        p = _check_elementary(spec)
        if maps is None:
            maps = enumerate_gl(spec.rank, p, budget)
        self.spec = spec
        self.maps = maps
        mats = np.array([m.matrix for m in maps], dtype=np.int64)
        coords = spec.coords_table()
        images = np.einsum('gij,nj->gni', mats, coords) % p
        perms = images.dot(np.array(spec.strides, dtype=np.int64))
        self.perms = np.ascontiguousarray(perms, dtype=np.uint16)
        inverse = np.empty_like(self.perms)
        rows = np.arange(len(maps))[:, None]
        inverse[rows, self.perms] = np.arange(spec.order, dtype=np.uint16)
        self.inverse = np.ascontiguousarray(inverse)

    def __len__(self):
        return len(self.maps)

_gl_tables = {}

def gl_table(spec, budget=None):
    try:
        return _gl_tables[spec.factors]
    except KeyError:
        log.debug("building GL table for %r", spec)
        table = GLTable(spec, budget=budget)
        _gl_tables[spec.factors] = table
        return table


def apply_map(m, A):
    spec = A.spec
    p = _check_elementary(spec)
    if p != m.p or spec.rank != m.r:
        raise SpecMismatchError("map does not act on this group",
                                m.spec(), spec)
    perm = m.permutation()
    return GroupMultiset(spec, [(perm[index], mult)
                                for index, mult in A.index_items()])

def orbit(A):
    """All images of A under GL, as a set."""
    table = gl_table(A.spec)
    return set(GroupMultiset(A.spec, [(int(perm[index]), mult)
                                      for index, mult in A.index_items()])
               for perm in table.perms)

# ____________________________________________________________

class CanonicalForm(object):
    """An orbit: its least representative, the stabilizer size and, after
    orbit_dedupe(), how many inputs fell into it."""

    def __init__(self, representative, stabilizer_size, encountered=1):
        self.representative = representative
        self.stabilizer_size = stabilizer_size
        self.encountered = encountered

    @property
    def key(self):
        return self.representative.vector()

    def orbit_size(self):
        spec = self.representative.spec
        return gl_order(spec.rank, spec.elementary_prime()) \
            // self.stabilizer_size

    def __eq__(self, other):
        return (isinstance(other, CanonicalForm) and
                self.representative == other.representative)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.representative)

    def __repr__(self):
        return '<CanonicalForm %r stabilizer=%d>' % (self.representative,
                                                     self.stabilizer_size)


def canonical_vector(table, vector):
    """(least image, stabilizer size) of a multiplicity vector"""
    if max(vector) > 255:
        raise BudgetExceeded('multiplicity', 255, 'canonical form')
    return kernel.lexmin_image(table.inverse, vector)

def canonical_form(A, budget=None):
    spec = A.spec
    _check_elementary(spec)
    budget = config.get_budget(budget)
    if spec.order > budget.max_order:
        raise BudgetExceeded('max_order', budget.max_order, repr(spec))
    table = gl_table(spec, budget)
    best, count = canonical_vector(table, A.vector())
    return CanonicalForm(GroupMultiset.from_vector(spec, best), count)

def orbit_dedupe(sets, budget=None):
    """One CanonicalForm per orbit met in 'sets', ordered by representative,
    each with the number of inputs it absorbed."""
    seen = {}
    for A in sets:
        form = canonical_form(A, budget)
        key = form.key
        if key in seen:
            seen[key].encountered += 1
        else:
            seen[key] = form
    return [seen[key] for key in sorted(seen)]
