"""Finite abelian groups in invariant-factor form, their elements and
multisets over them.

Elements are stored as canonical residues and are also addressed by a
mixed-radix index, index = ((c0*d1) + c1)*d2 + c2 for three factors, so
that multiplicities fit in an array indexed by element.
"""
import itertools
import struct
from functools import reduce
from math import gcd

import numpy as np

from . import config
from .error import GroupError, SpecMismatchError, BudgetExceeded
from .error import CertificateError

MAX_ORDER = 2 ** 32

_tables = {}      # factors -> dict of per-group tables, shared by all specs


def lift(value, modulus):
    """The bracket [x]: the residue of 'value' in {0, ..., modulus-1}."""
    return value % modulus

def _lcm(a, b):
    return a * b // gcd(a, b)


class GroupSpec(object):
    __slots__ = ('factors', 'order', 'strides')

    def __init__(self, factors):
        try:
            factors = tuple(int(d) for d in factors)
        except (TypeError, ValueError):
            raise GroupError("invariant factors must be integers, got %r"
                             % (factors,))
        for d in factors:
            if d < 1:
                raise GroupError("invariant factor %d is not >= 1" % (d,))
        for d1, d2 in zip(factors, factors[1:]):
            if d2 % d1:
                raise GroupError("invariant factors %r do not form a "
                                 "divisibility chain" % (factors,))
        order = reduce(lambda x, y: x * y, factors, 1)
        if order > MAX_ORDER:
            raise GroupError("group order %d does not fit a 32-bit index"
                             % (order,))
        strides = []
        step = 1
        for d in reversed(factors):
            strides.append(step)
            step *= d
        self.factors = factors
        self.order = order
        self.strides = tuple(reversed(strides))

    @classmethod
    def parse(cls, text):
        """Parse '3,3,15' (or '3x3x15')."""
        parts = [part for part in text.replace('x', ',').split(',')
                 if part.strip()]
        try:
            return cls(int(part) for part in parts)
        except ValueError:
            raise GroupError("cannot parse group %r" % (text,))

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self.factors == other.factors

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(('GroupSpec', self.factors))

    def __repr__(self):
        return 'GroupSpec(%s)' % (self.label(),)

    def __reduce__(self):
        return (GroupSpec, (self.factors,))

    def label(self):
        return ','.join(str(d) for d in self.factors)

    @property
    def rank(self):
        return len(self.factors)

    @property
    def exponent(self):
        if not self.factors:
            return 1
        return self.factors[-1]

    def davenport_lower_bound(self):
        """M(G) = sum(d_i) - r + 1."""
        return sum(self.factors) - len(self.factors) + 1

    def elementary_prime(self):
        """Return p if the group is (Z_p)^r with r >= 1, else None."""
        from sympy import isprime
        if not self.factors:
            return None
        p = self.factors[0]
        if self.factors[-1] != p or not isprime(p):
            return None
        return p

    def is_elementary(self):
        return self.elementary_prime() is not None

    # ____________________________________________________________
    # elements and indices

    def identity(self):
        return GroupElement(self, (0,) * len(self.factors))

    def element(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = coords[0]
        return GroupElement(self, coords)

    def index_of(self, coords):
        index = 0
        for c, d in zip(coords, self.factors):
            index = index * d + (c % d)
        return index

    def coords_of(self, index):
        if not 0 <= index < self.order:
            raise GroupError("index %r out of range for %r" % (index, self))
        coords = []
        for d in reversed(self.factors):
            coords.append(index % d)
            index //= d
        return tuple(reversed(coords))

    def from_index(self, index):
        return GroupElement(self, self.coords_of(index), _checked=True)

    def elements(self):
        for index in range(self.order):
            yield self.from_index(index)

    def coerce(self, x):
        """Return the index of 'x' (a GroupElement, an index or a tuple)."""
        if isinstance(x, GroupElement):
            if x.spec != self:
                raise SpecMismatchError("element from another group",
                                        x.spec, self)
            return x.index
        if isinstance(x, (int, np.integer)):
            x = int(x)
            if not 0 <= x < self.order:
                raise GroupError("index %r out of range for %r" % (x, self))
            return x
        coords = tuple(x)
        if len(coords) != len(self.factors):
            raise GroupError("element %r has %d coordinates, %r needs %d"
                             % (coords, len(coords), self, len(self.factors)))
        return self.index_of(coords)

    # ____________________________________________________________
    # tables, shared per group

    def _get_tables(self):
        try:
            return _tables[self.factors]
        except KeyError:
            if self.order > config.DEFAULT.max_order:
                raise BudgetExceeded('max_order', config.DEFAULT.max_order,
                                     'tables for %r' % (self,))
            tables = {'translations': {}}
            _tables[self.factors] = tables
            return tables

    def coords_table(self):
        """numpy array of shape (order, rank) with the coordinates of every
        element, in index order"""
        tables = self._get_tables()
        if 'coords' not in tables:
            if self.factors:
                grid = np.unravel_index(np.arange(self.order), self.factors)
                coords = np.stack(grid, axis=1).astype(np.int64)
            else:
                coords = np.zeros((1, 0), dtype=np.int64)
            coords.flags.writeable = False
            tables['coords'] = coords
        return tables['coords']

    def _encode(self, coords):
        # coords: numpy array (..., rank), already reduced
        return coords.dot(np.array(self.strides, dtype=np.int64))

    def translation(self, x):
        """numpy permutation t with t[g] = index of g + x"""
        x = self.coerce(x)
        translations = self._get_tables()['translations']
        try:
            return translations[x]
        except KeyError:
            coords = self.coords_table()
            moduli = np.array(self.factors, dtype=np.int64)
            result = self._encode((coords + coords[x]) % moduli)
            result.flags.writeable = False
            translations[x] = result
            return result

    def addition_table(self):
        """numpy (order, order) table of index sums, for small groups"""
        tables = self._get_tables()
        if 'add' not in tables:
            if self.order > config.TABLE_LIMIT:
                raise BudgetExceeded('table_limit', config.TABLE_LIMIT,
                                     'addition table for %r' % (self,))
            table = np.empty((self.order, self.order), dtype=np.int32)
            for x in range(self.order):
                table[x] = self.translation(x)
            table.flags.writeable = False
            tables['add'] = table
            tables['add_rows'] = table.tolist()
            neg = [row.index(0) for row in tables['add_rows']]
            tables['neg'] = neg
        return tables['add']

    def add_index(self, i, j):
        if self.order <= config.TABLE_LIMIT:
            self.addition_table()
            return _tables[self.factors]['add_rows'][i][j]
        ci = self.coords_of(i)
        cj = self.coords_of(j)
        return self.index_of([a + b for a, b in zip(ci, cj)])

    def neg_index(self, i):
        if self.order <= config.TABLE_LIMIT:
            self.addition_table()
            return _tables[self.factors]['neg'][i]
        return self.index_of([-c for c in self.coords_of(i)])

    def scale_index(self, i, k):
        return self.index_of([k * c for c in self.coords_of(i)])

    def addition_rows(self):
        """The addition table as nested lists (fast for pure-Python loops)"""
        self.addition_table()
        return _tables[self.factors]['add_rows']

    def element_order(self, i):
        order = 1
        for c, d in zip(self.coords_of(i), self.factors):
            order = _lcm(order, d // gcd(c, d))
        return order


class GroupElement(object):
    __slots__ = ('spec', 'coords')

    def __init__(self, spec, coords, _checked=False):
        if not _checked:
            coords = tuple(coords)
            if len(coords) != len(spec.factors):
                raise GroupError("element %r has %d coordinates, %r needs %d"
                                 % (coords, len(coords), spec,
                                    len(spec.factors)))
            try:
                coords = tuple(lift(int(c), d)
                               for c, d in zip(coords, spec.factors))
            except (TypeError, ValueError):
                raise GroupError("non-integer coordinate in %r" % (coords,))
        self.spec = spec
        self.coords = coords

    @property
    def index(self):
        return self.spec.index_of(self.coords)

    def _check(self, other):
        if not isinstance(other, GroupElement):
            raise TypeError("expected a GroupElement, got %r" % (other,))
        if other.spec != self.spec:
            raise SpecMismatchError("elements from different groups",
                                    self.spec, other.spec)

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.spec, [a + b for a, b in
                                        zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return GroupElement(self.spec, [a - b for a, b in
                                        zip(self.coords, other.coords)])

    def __neg__(self):
        return GroupElement(self.spec, [-c for c in self.coords])

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement(self.spec, [k * c for c in self.coords])
    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def order(self):
        return self.spec.element_order(self.index)

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and
                self.spec == other.spec and self.coords == other.coords)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        self._check(other)
        return self.coords < other.coords

    def __hash__(self):
        return hash((self.spec.factors, self.coords))

    def __repr__(self):
        return '(%s)' % ','.join(str(c) for c in self.coords)

    def __reduce__(self):
        return (GroupElement, (self.spec, self.coords))


def element_add(a, b):
    if a.spec != b.spec:
        raise SpecMismatchError("cannot add elements of different groups",
                                a.spec, b.spec)
    return a + b


class GroupMultiset(object):
    """An immutable multiset of elements of 'spec'.

    Multiplicities are kept in a dense tuple indexed by element index when
    the group order is at most config.DENSE_LIMIT, in a dict otherwise.
    """
    __slots__ = ('spec', '_items', '_size', '_counts', '_hash')

    def __init__(self, spec, counts=()):
        if isinstance(counts, dict):
            counts = counts.items()
        merged = {}
        for index, mult in counts:
            index = spec.coerce(index)
            if mult < 0:
                raise GroupError("negative multiplicity %r" % (mult,))
            if mult:
                merged[index] = merged.get(index, 0) + int(mult)
        self.spec = spec
        self._items = tuple(sorted(merged.items()))
        self._size = sum(merged.values())
        if spec.order <= config.DENSE_LIMIT:
            dense = [0] * spec.order
            for index, mult in self._items:
                dense[index] = mult
            self._counts = tuple(dense)
        else:
            self._counts = merged
        self._hash = None

    @classmethod
    def empty(cls, spec):
        return cls(spec)

    @classmethod
    def from_elements(cls, spec, elements):
        counts = {}
        for x in elements:
            index = spec.coerce(x)
            counts[index] = counts.get(index, 0) + 1
        return cls(spec, counts)

    @classmethod
    def from_indices(cls, spec, indices):
        counts = {}
        for index in indices:
            counts[index] = counts.get(index, 0) + 1
        return cls(spec, counts)

    @classmethod
    def from_vector(cls, spec, vector):
        if len(vector) != spec.order:
            raise GroupError("multiplicity vector of length %d, group order "
                             "is %d" % (len(vector), spec.order))
        return cls(spec, [(i, int(m)) for i, m in enumerate(vector) if m])

    # ____________________________________________________________

    def __len__(self):
        return self._size

    def __iter__(self):
        for index, mult in self._items:
            x = self.spec.from_index(index)
            for _ in range(mult):
                yield x

    def __contains__(self, x):
        return self.multiplicity(x) > 0

    def multiplicity(self, x):
        if not isinstance(x, int):
            x = self.spec.coerce(x)
        if isinstance(self._counts, tuple):
            return self._counts[x]
        return self._counts.get(x, 0)

    def index_items(self):
        """Sorted tuple of (index, multiplicity) pairs."""
        return self._items

    def items(self):
        return [(self.spec.from_index(index), mult)
                for index, mult in self._items]

    def indices(self):
        """Sorted element indices, repeated by multiplicity."""
        result = []
        for index, mult in self._items:
            result.extend([index] * mult)
        return result

    def support(self):
        return [self.spec.from_index(index) for index, _ in self._items]

    def support_size(self):
        return len(self._items)

    def is_set(self):
        return all(mult == 1 for _, mult in self._items)

    def vector(self):
        if not isinstance(self._counts, tuple):
            raise BudgetExceeded('dense_limit', config.DENSE_LIMIT,
                                 'dense vector of %r' % (self.spec,))
        return self._counts

    def total(self):
        return multiset_sum(self)

    def _check(self, other):
        if not isinstance(other, GroupMultiset):
            raise TypeError("expected a GroupMultiset, got %r" % (other,))
        if other.spec != self.spec:
            raise SpecMismatchError("multisets over different groups",
                                    self.spec, other.spec)

    def __add__(self, other):
        self._check(other)
        return GroupMultiset(self.spec, self._items + other._items)

    def __sub__(self, other):
        self._check(other)
        if not other.issubset(self):
            raise GroupError("%r is not a sub-multiset of %r" % (other, self))
        counts = dict(self._items)
        for index, mult in other._items:
            counts[index] -= mult
        return GroupMultiset(self.spec, counts)

    def add(self, x, times=1):
        return GroupMultiset(self.spec,
                             self._items + ((self.spec.coerce(x), times),))

    def remove(self, x, times=1):
        index = self.spec.coerce(x)
        return self - GroupMultiset(self.spec, [(index, times)])

    def issubset(self, other):
        self._check(other)
        return all(other.multiplicity(index) >= mult
                   for index, mult in self._items)

    def to_bytes(self):
        """Canonical byte encoding, usable as a memo or cache key."""
        flat = [value for pair in self._items for value in pair]
        return struct.pack('<%dI' % len(flat), *flat)

    def __eq__(self, other):
        return (isinstance(other, GroupMultiset) and
                self.spec == other.spec and self._items == other._items)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec.factors, self._items))
        return self._hash

    def __repr__(self):
        parts = []
        for x, mult in self.items():
            if mult == 1:
                parts.append(repr(x))
            else:
                parts.append('%r^%d' % (x, mult))
        return '{%s}' % ', '.join(parts)

    def __reduce__(self):
        return (GroupMultiset, (self.spec, self._items))


def multiset_sum(A):
    spec = A.spec
    total = [0] * spec.rank
    for index, mult in A.index_items():
        for i, c in enumerate(spec.coords_of(index)):
            total[i] += mult * c
    return GroupElement(spec, total)


def sub_multisets(A, budget=None):
    """Yield every sub-multiset of A exactly once, from the empty one to A."""
    budget = config.get_budget(budget)
    if len(A) > budget.subset_guard:
        raise BudgetExceeded('subset_guard', budget.subset_guard,
                             'multiset of size %d' % len(A))
    items = A.index_items()
    indices = [index for index, _ in items]
    ranges = [range(mult + 1) for _, mult in items]
    for counts in itertools.product(*ranges):
        yield GroupMultiset(A.spec, zip(indices, counts))


class ZerosumCertificate(object):
    """A non-empty sub-multiset whose sum is 'target' (the identity unless
    told otherwise)."""
    __slots__ = ('sub', 'target')

    def __init__(self, sub, parent=None, target=None):
        if target is None:
            target = sub.spec.identity()
        self.sub = sub
        self.target = target
        self.verify(parent)

    def verify(self, parent=None):
        sub = self.sub
        if len(sub) == 0:
            raise CertificateError("empty certificate")
        if multiset_sum(sub) != self.target:
            raise CertificateError("certificate %r sums to %r, not %r"
                                   % (sub, multiset_sum(sub), self.target))
        if parent is not None and not sub.issubset(parent):
            raise CertificateError("certificate %r is not contained in %r"
                                   % (sub, parent))
        return True

    def __len__(self):
        return len(self.sub)

    def __eq__(self, other):
        return (isinstance(other, ZerosumCertificate) and
                self.sub == other.sub and self.target == other.target)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.sub, self.target))

    def __repr__(self):
        return '<ZerosumCertificate %r>' % (self.sub,)
