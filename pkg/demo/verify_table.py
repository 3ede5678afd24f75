"""Recompute the known zero-sum constants of Z_3^3 and print a table.

    python demo/verify_table.py [--jobs N]
"""
import sys
import logging

from zerosum.search import verify_table


def main(argv):
    jobs = None
    if argv[:1] == ['--jobs']:
        jobs = int(argv[1])
    logging.basicConfig(level=logging.INFO, format='%(message)s')
    rows = verify_table(jobs=jobs, progress=True)
    for row in rows:
        print('%-6s %3d %3d  %-10s %8d ms  %s' % (
            row['name'], row['expected'], row['value'], row['method'],
            row['wall_ms'], 'ok' if row['passed'] else 'FAIL'))
    return 0 if all(row['passed'] for row in rows) else 1


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
