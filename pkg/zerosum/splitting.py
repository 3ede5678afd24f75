"""Zero-sums over Z_3 + Z_3 + Z_3d by splitting.

For gcd(d, 3) = 1 the group is Z_3^3 + Z_d: an element (a, b, c) becomes
the point (a, b, c mod 3) of Z_3^3 labelled with c mod d.  Disjoint short
zero-sums of the projection are pulled out one by one; each is a single
element of Z_d once lifted back, and d of those always contain a zero-sum.
"""
import itertools
import logging
import os
import tempfile
import warnings
from math import gcd

from sympy.ntheory.modular import crt

from .boards import Z3_3, render_sequence
from .engine import find_zerosum
from .error import GroupError, PreconditionError, TheoremViolation
from .group import GroupSpec, GroupMultiset, ZerosumCertificate

log = logging.getLogger(__name__)

RESIDUAL_GUARD = 1 << 16


def _modulus(spec):
    """d for a group Z_3 + Z_3 + Z_3d."""
    f = spec.factors
    if len(f) != 3 or f[0] != 3 or f[1] != 3 or f[2] % 3:
        raise GroupError("%r is not of the form Z_3 + Z_3 + Z_3d" % (spec,))
    d = f[2] // 3
    if d % 3 == 0:
        raise PreconditionError("d = %d is divisible by 3, the group does "
                                "not split" % (d,))
    return d

def group_3d(d):
    return GroupSpec((3, 3, 3 * d))


class SplitSequence(object):
    """A multiset over Z_3 + Z_3 + Z_3d as its projection to Z_3^3 plus one
    Z_d label per element."""

    def __init__(self, d, projected, labels):
        self.d = d
        self.projected = projected
        self.labels = tuple(sorted(labels))   # (point index, label) pairs

    @classmethod
    def split(cls, seq):
        d = _modulus(seq.spec)
        labels = []
        for x, mult in seq.items():
            a, b, c = x.coords
            point = Z3_3.index_of((a, b, c % 3))
            labels.extend([(point, c % d)] * mult)
        projected = GroupMultiset.from_indices(Z3_3,
                                               [p for p, _ in labels])
        return cls(d, projected, labels)

    def unsplit(self):
        spec = group_3d(self.d)
        elements = []
        for point, label in self.labels:
            a, b, c3 = Z3_3.coords_of(point)
            c = int(crt([3, self.d], [c3, label])[0])
            elements.append(spec.element(a, b, c))
        return GroupMultiset.from_elements(spec, elements)

    def __repr__(self):
        return '<SplitSequence d=%d %r>' % (self.d, self.projected)

def split(seq):
    return SplitSequence.split(seq)


class SplitOutcome(object):
    """A certificate plus how it was found: 'trivial' (the zero element),
    'split' (extracted parts only), 'split-residual' (parts and a zero-sum
    of what was left), 'exact' (direct search in the whole group)."""

    def __init__(self, certificate, strategy, parts):
        self.certificate = certificate
        self.strategy = strategy
        self.parts = parts

    def __repr__(self):
        return '<SplitOutcome %s %r>' % (self.strategy, self.certificate)

# ____________________________________________________________

def _project(spec, index):
    a, b, c = spec.coords_of(index)
    return Z3_3.index_of((a, b, c % 3))

def _short_part(spec, pool):
    """The preferred short zero-sum of the projection among the occurrences
    in 'pool' (sorted element indices), as a tuple of pool positions."""
    proj = [_project(spec, i) for i in pool]
    n = len(pool)
    for i in range(n):
        if proj[i] == 0:
            return (i,)
    for i, j in itertools.combinations(range(n), 2):
        if Z3_3.add_index(proj[i], proj[j]) == 0:
            return (i, j)
    repeated = None
    for i, j, k in itertools.combinations(range(n), 3):
        total = Z3_3.add_index(Z3_3.add_index(proj[i], proj[j]), proj[k])
        if total:
            continue
        if proj[i] != proj[j]:
            return (i, j, k)
        if repeated is None:
            repeated = (i, j, k)
    return repeated

def _label(spec, d, indices):
    return sum(spec.coords_of(i)[2] for i in indices) % d

def _subset_sums(values, d):
    """residue -> positions of a non-empty subset of 'values' with that sum
    (the first one found in order)"""
    reach = {}
    for pos, value in enumerate(values):
        new = {}
        for residue, subset in reach.items():
            r = (residue + value) % d
            if r not in reach and r not in new:
                new[r] = subset + (pos,)
        if value % d not in reach and value % d not in new:
            new[value % d] = (pos,)
        reach.update(new)
    return reach

def _prefix_zerosum(values, d):
    """Positions of a consecutive block summing to 0 mod d; needs at
    least d values."""
    seen = {0: 0}
    total = 0
    for pos, value in enumerate(values, 1):
        total = (total + value) % d
        if total in seen:
            return tuple(range(seen[total], pos))
        seen[total] = pos
    return None

def _dump(seq):
    fd, path = tempfile.mkstemp(prefix='zerosum-', suffix='.txt')
    with os.fdopen(fd, 'w') as f:
        f.write('# group %s\n' % seq.spec.label())
        f.write(render_sequence(seq))
    return path

def _certificate(seq, indices):
    return ZerosumCertificate(GroupMultiset.from_indices(seq.spec, indices),
                              seq)

def solve_3d(seq, allow_exact=True):
    spec = seq.spec
    d = _modulus(spec)
    if len(seq) < 3 * d + 4:
        raise PreconditionError("need at least %d elements, got %d"
                                % (3 * d + 4, len(seq)))
    if gcd(d, 6) != 1:
        warnings.warn("d = %d is not coprime to 6: a zero-sum is not "
                      "guaranteed, searching anyway" % (d,))
    if 0 in seq:
        return SplitOutcome(_certificate(seq, [0]), 'trivial', [])

    pool = seq.indices()
    parts = []
    labels = []
    while True:
        if len(labels) >= d:
            block = _prefix_zerosum(labels, d)
        else:
            block = _subset_sums(labels, d).get(0)
        if block is not None:
            chosen = [parts[pos] for pos in block]
            indices = [i for part in chosen for i in part]
            log.debug("split: %d of %d parts", len(chosen), len(parts))
            return SplitOutcome(_certificate(seq, indices), 'split',
                                [GroupMultiset.from_indices(spec, part)
                                 for part in chosen])
        found = _short_part(spec, pool)
        if found is None:
            break
        part = tuple(pool[pos] for pos in found)
        for pos in reversed(found):
            del pool[pos]
        parts.append(part)
        labels.append(_label(spec, d, part))

    log.debug("extraction stalled with %d parts and %d elements left",
              len(parts), len(pool))
    outcome = _residual(seq, d, pool, parts, labels)
    if outcome is not None:
        return outcome
    if allow_exact:
        certificate = find_zerosum(seq)
        if certificate is not None:
            return SplitOutcome(certificate, 'exact', [])
    path = _dump(seq)
    raise TheoremViolation("no zero-sum found in %d elements of %s"
                           % (len(seq), spec.label()),
                           {'group': list(spec.factors),
                            'sequence': [list(x.coords) for x in seq]},
                           path)

def _residual(seq, d, pool, parts, labels):
    """Zero-sums of the projection of what is left, completed by a set of
    parts whose labels cancel theirs."""
    spec = seq.spec
    rest = GroupMultiset.from_indices(spec, pool)
    items = list(rest.index_items())
    combinations = 1
    for _, mult in items:
        combinations *= mult + 1
    if combinations > RESIDUAL_GUARD:
        log.debug("residual of %d elements too large", len(rest))
        return None
    reach = _subset_sums(labels, d)
    reach.setdefault(0, ())
    best = None
    for takes in itertools.product(*[range(mult + 1) for _, mult in items]):
        chosen = []
        for (index, _), take in zip(items, takes):
            chosen.extend([index] * take)
        if not chosen:
            continue
        total = (0, 0, 0)
        for i in chosen:
            total = tuple(a + b for a, b in zip(total, spec.coords_of(i)))
        if total[0] % 3 or total[1] % 3 or total[2] % 3:
            continue
        block = reach.get((-total[2]) % d)
        if block is None:
            continue
        size = len(chosen) + sum(len(parts[pos]) for pos in block)
        if best is None or size < best[0]:
            best = (size, chosen, block)
    if best is None:
        return None
    _, chosen, block = best
    indices = list(chosen)
    for pos in block:
        indices.extend(parts[pos])
    return SplitOutcome(_certificate(seq, indices), 'split-residual',
                        [GroupMultiset.from_indices(spec, parts[pos])
                         for pos in block] +
                        [GroupMultiset.from_indices(spec, chosen)])

def find_zerosum_3d(seq):
    return solve_3d(seq).certificate

def zerosum_free_witness_3d(d):
    """3d + 3 elements without a zero-sum: (1,0,0) and (0,1,0) twice each
    and 3d - 1 copies of (0,0,1)."""
    spec = group_3d(d)
    _modulus(spec)
    return GroupMultiset(spec, [((1, 0, 0), 2), ((0, 1, 0), 2),
                                ((0, 0, 1), 3 * d - 1)])
