"""Exact integer linear algebra over Python ints: Smith normal form, ranks
over prime fields and solvability of M f = c modulo primes."""
from math import gcd

from sympy import primefactors, nextprime

from .error import DimensionError


class IntMatrix(object):
    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, entries, cols=None):
        entries = tuple(tuple(int(a) for a in row) for row in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != cols:
                raise DimensionError("ragged matrix: row of length %d, "
                                     "expected %d" % (len(row), cols))
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    def tolist(self):
        return [list(row) for row in self.entries]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionError("cannot multiply %dx%d by %dx%d"
                                 % (self.rows, self.cols,
                                    other.rows, other.cols))
        cols = list(zip(*other.entries)) or [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(row, col))
                           for col in cols] for row in self.entries],
                         other.cols)

    def apply(self, vector):
        if len(vector) != self.cols:
            raise DimensionError("vector of length %d for %d columns"
                                 % (len(vector), self.cols))
        return [sum(a * b for a, b in zip(row, vector))
                for row in self.entries]

    def augmented(self, column):
        if len(column) != self.rows:
            raise DimensionError("right-hand side of length %d for %d rows"
                                 % (len(column), self.rows))
        return IntMatrix([row + (int(c),)
                          for row, c in zip(self.entries, column)],
                         self.cols + 1)

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def determinant(self):
        """Fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign = 1
        previous = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) \
                        // previous
            previous = a[k][k]
        if n == 0:
            return 1
        return sign * a[n - 1][n - 1]

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.cols == other.cols and
                self.entries == other.entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return 'IntMatrix(%r)' % (self.tolist(),)


class SnfDecomposition(object):
    """U * M * V = D, U and V unimodular."""

    def __init__(self, U, D, V):
        self.U = U
        self.D = D
        self.V = V

    def diagonal(self):
        return self.D.diagonal()

    def rank(self):
        return sum(1 for d in self.diagonal() if d)

    def __repr__(self):
        return '<SnfDecomposition diagonal=%r>' % (self.diagonal(),)


def smith_normal_form(M):
    m, n = M.rows, M.cols
    D = M.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(target, source, factor):
        # row[target] += factor * row[source]
        D[target] = [a + factor * b for a, b in zip(D[target], D[source])]
        U[target] = [a + factor * b for a, b in zip(U[target], U[source])]

    def add_col(target, source, factor):
        for row in D:
            row[target] += factor * row[source]
        for row in V:
            row[target] += factor * row[source]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] and (pivot is None or
                                    abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            if any(D[i][t] for i in range(t + 1, m)) or \
               any(D[t][j] for j in range(t + 1, n)):
                continue
            # the pivot must divide the remaining block
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    return SnfDecomposition(IntMatrix(U, m), IntMatrix(D, n),
                            IntMatrix(V, n))


def rank_mod_p(M, p):
    rows = [[a % p for a in row] for row in M.entries]
    rank = 0
    for col in range(M.cols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(a * inv) % p for a in rows[rank]]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col]
            if factor:
                rows[i] = [(a - factor * b) % p
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank

# ____________________________________________________________

class FeasibilityVerdict(object):
    """Solvability of M f = c modulo primes, read off the Smith form.

    'generic_feasible' means solvable over the rationals (then all but the
    finitely many primes in 'exceptional_primes' work).  Otherwise
    'feasible_primes' is the complete finite set of primes that work, each
    dividing 'certificate'.
    """

    def __init__(self, snf, rhs, excluded):
        self.snf = snf
        self.rhs = rhs             # U c
        self.excluded = frozenset(excluded)
        diagonal = snf.diagonal()
        self.rank = sum(1 for d in diagonal if d)
        obstruction = 0
        for i, value in enumerate(rhs):
            d = diagonal[i] if i < len(diagonal) else 0
            if d == 0:
                obstruction = gcd(obstruction, value)
        self.generic_feasible = obstruction == 0
        if self.generic_feasible:
            self.certificate = 0
            self.exceptional_primes = frozenset(
                p for i, d in enumerate(diagonal) if d
                for p in primefactors(d)
                if not self.feasible_mod(p))
            self.feasible_primes = None
        else:
            self.certificate = abs(obstruction)
            self.exceptional_primes = frozenset()
            self.feasible_primes = frozenset(
                p for p in primefactors(self.certificate)
                if self.feasible_mod(p))

    def feasible_mod(self, p):
        diagonal = self.snf.diagonal()
        for i, value in enumerate(self.rhs):
            d = diagonal[i] if i < len(diagonal) else 0
            if d % p == 0 and value % p:
                return False
        return True

    @property
    def feasible(self):
        if self.generic_feasible:
            return True
        return bool(self.feasible_primes - self.excluded)

    @property
    def obstruction_primes(self):
        """Primes where the system is solvable (finite case only)."""
        if self.generic_feasible:
            return None
        return sorted(self.feasible_primes)

    def witness_prime(self):
        """A prime outside 'excluded' where the system is solvable."""
        if self.generic_feasible:
            p = 2
            while p in self.excluded or p in self.exceptional_primes:
                p = nextprime(p)
            return p
        allowed = sorted(self.feasible_primes - self.excluded)
        return allowed[0] if allowed else None

    def solve_mod(self, p):
        """A solution f of M f = c mod p, or None."""
        if not self.feasible_mod(p):
            return None
        diagonal = self.snf.diagonal()
        V = self.snf.V
        g = [0] * V.rows
        for i, d in enumerate(diagonal):
            if d % p:
                g[i] = (self.rhs[i] * pow(d, -1, p)) % p
        return [value % p for value in V.apply(g)]

    def as_dict(self):
        return {'generic_feasible': self.generic_feasible,
                'feasible': self.feasible,
                'certificate': self.certificate,
                'obstruction_primes': self.obstruction_primes,
                'excluded': sorted(self.excluded)}

    def __repr__(self):
        if self.generic_feasible:
            return '<FeasibilityVerdict generic>'
        return '<FeasibilityVerdict primes=%r>' % (self.obstruction_primes,)


def solvable_coprime_to(M, c, excluded=(2, 3)):
    if len(c) != M.rows:
        raise DimensionError("right-hand side of length %d for %d rows"
                             % (len(c), M.rows))
    snf = smith_normal_form(M)
    rhs = snf.U.apply([int(value) for value in c])
    return FeasibilityVerdict(snf, rhs, excluded)
