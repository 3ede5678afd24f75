"""Find zero-sums of random sequences of length 3d+4 over Z_3+Z_3+Z_3d and
report which strategy found them."""
import random
import sys
from collections import Counter

from zerosum.group import GroupMultiset
from zerosum.splitting import group_3d, solve_3d


def main(d=5, trials=200, seed=0):
    spec = group_3d(d)
    r = random.Random(seed)
    strategies = Counter()
    lengths = Counter()
    for _ in range(trials):
        seq = GroupMultiset.from_indices(
            spec, [r.randrange(spec.order) for _ in range(3 * d + 4)])
        outcome = solve_3d(seq)
        strategies[outcome.strategy] += 1
        lengths[len(outcome.certificate)] += 1
    print('Z_3 + Z_3 + Z_%d, %d sequences of length %d'
          % (3 * d, trials, 3 * d + 4))
    for strategy, count in sorted(strategies.items()):
        print('  %-15s %d' % (strategy, count))
    print('  certificate lengths: %s' % (sorted(lengths.items()),))


if __name__ == '__main__':
    main(*[int(arg) for arg in sys.argv[1:]])
