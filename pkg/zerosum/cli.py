"""zerosum command line.

Exit status: 0 when everything checked out, 1 when a statement being
verified failed (or a cached value disagreed), 2 on usage and input errors,
3 when a budget was exceeded.
"""
import argparse
import logging
import sys
import time

from . import af, atlas, boards, catalog, config, search, splitting
from .cache import ResultCache
from .error import (BudgetExceeded, CacheMismatchError, GroupError,
                    BoardFormatError, PreconditionError, TheoremViolation)
from .group import GroupSpec
from .report import (af_document, constant_document, dumps, forms_document,
                     result_record, table_document, witness_text)

log = logging.getLogger(__name__)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# command line name -> af.FILTERS name
AF_FILTERS = {'paper': 'case_viii', 'case-viii': 'case_viii', 'full': 'full'}


def _group(text):
    try:
        return GroupSpec.parse(text)
    except GroupError as e:
        raise argparse.ArgumentTypeError(str(e))

def _read(path):
    if path == '-':
        return sys.stdin.read()
    with open(path) as f:
        return f.read()

def _emit(args, document, text):
    if args.json:
        sys.stdout.write(dumps(document))
    else:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')

# ____________________________________________________________

def cmd_constant(args, budget):
    q = search.ConstantQuery(args.group, args.family, args.k)
    start = time.time()
    compute = lambda: search.compute_constant(q, budget, args.exhaustive,
                                              progress=args.progress)
    if args.cache:
        record = ResultCache(args.cache).get_or_compute(q, compute,
                                                        args.recompute)
    else:
        record = result_record(compute())
    wall_ms = int((time.time() - start) * 1000)
    _emit(args, constant_document(q, record, wall_ms, args.timings),
          '%d' % record['value'])
    return EXIT_OK

def cmd_verify_table(args, budget):
    rows = search.verify_table(budget, progress=args.progress,
                               exhaustive=args.exhaustive)
    lines = []
    for row in rows:
        line = '%-6s expected %2d  computed %2d  %s' % (
            row['name'], row['expected'], row['value'],
            'pass' if row['passed'] else 'FAIL')
        if row['published'] != row['expected']:
            line += '  (printed %d)' % row['published']
        lines.append(line)
    _emit(args, table_document(rows, args.timings), '\n'.join(lines))
    if all(row['passed'] for row in rows):
        return EXIT_OK
    return EXIT_VIOLATION

def cmd_classify(args, budget):
    start = time.time()
    what = args.what
    if what == 'five-point':
        report = atlas.check_five_point_lemma()
        document = {'query': 'five-point', 'checked': report['checked'],
                    'violators': report['violators']}
        _emit(args, document, '%d sets checked, %d violators'
              % (report['checked'], len(report['violators'])))
        return EXIT_VIOLATION if report['violators'] else EXIT_OK
    if what == 'completeness':
        report = atlas.verify_3k5_completeness(args.k, budget=budget,
                                               progress=args.progress,
                                               reading=args.reading)
        document = dict(report, query='completeness')
        _emit(args, document, '%d found, %d recipe orbits, %s'
              % (report['found'], report['recipe_orbits'],
                 'complete' if report['complete'] else 'INCOMPLETE'))
        return EXIT_OK if report['complete'] else EXIT_VIOLATION
    if what == 'distinct':
        forms = atlas.classify_distinct_sets(args.size, budget,
                                             progress=args.progress)
        query = 'distinct-%d' % args.size
    elif what == 'fourteen':
        forms = atlas.classify_14_point(args.reading, budget,
                                        progress=args.progress)
        query = 'fourteen-%s' % args.reading
    else:
        forms = atlas.assembled_orbits(args.k, budget, args.reading)
        query = 'family-%d' % args.k
    wall_ms = int((time.time() - start) * 1000)
    text = ['%s: %d orbits' % (query, len(forms))]
    for form in forms:
        text.append(witness_text(form.representative))
    _emit(args, forms_document(query, forms, wall_ms, args.timings),
          '\n'.join(text))
    return EXIT_OK

def cmd_af_verify(args, budget):
    name = AF_FILTERS[args.filter]
    report = af.verify_af_theorem(name, budget, progress=args.progress,
                                  strict=False)
    text = '%d candidates, %d systems, %d violations' % (
        report['candidates'], report['systems'], len(report['violations']))
    if 'counts' in report:
        counts = report['counts']
        text += '\nraw %d, rotated %d, orbits %d (printed %d, %d, %d)' % (
            counts['raw'], counts['rotated'], counts['orbits'],
            catalog.CASE_VIII_PUBLISHED['raw'],
            catalog.CASE_VIII_PUBLISHED['rotated'],
            catalog.CASE_VIII_PUBLISHED['orbits'])
    _emit(args, af_document(report, args.timings), text)
    return EXIT_VIOLATION if report['violations'] else EXIT_OK

def cmd_find_zerosum(args, budget):
    seq = boards.parse_sequence(_read(args.input), args.group)
    outcome = splitting.solve_3d(seq)
    sub = outcome.certificate.sub
    document = {'query': {'group': list(args.group.factors),
                          'length': len(seq)},
                'strategy': outcome.strategy,
                'certificate': sub}
    _emit(args, document, boards.render_sequence(sub))
    return EXIT_OK

def cmd_render(args, budget):
    A = boards.parse_sequence(_read(args.input), boards.Z3_3)
    sys.stdout.write(boards.render_board(A))
    return EXIT_OK

def cmd_parse(args, budget):
    A = boards.parse_board(_read(args.input))
    sys.stdout.write(boards.render_sequence(A))
    return EXIT_OK

def cmd_witness(args, budget):
    if args.catalog:
        A = catalog.board(args.catalog)
        _emit(args, {'query': {'catalog': args.catalog}, 'witness': A},
              witness_text(A))
        return EXIT_OK
    q = search.ConstantQuery(args.group, args.family, args.k)
    result = search.compute_constant(q, budget, args.exhaustive,
                                     progress=args.progress)
    if not search.witness_extensions(result):
        raise TheoremViolation("witness of %s is not extremal" % q.name())
    text = witness_text(result.witness)
    if not isinstance(text, str):
        text = boards.render_sequence(result.witness)
    _emit(args, constant_document(q, result_record(result)), text)
    return EXIT_OK

# ____________________________________________________________

def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--group', type=_group, default=boards.Z3_3,
                        help="invariant factors, e.g. 3,3,3 (default)")
    common.add_argument('--cache', metavar='PATH',
                        help="JSON-lines result cache")
    common.add_argument('--recompute', action='store_true',
                        help="recompute cached values and compare")
    common.add_argument('--jobs', type=int, help="worker processes")
    common.add_argument('--node-limit', type=int)
    common.add_argument('--exhaustive', action='store_true',
                        help="full search instead of reduction bounds")
    common.add_argument('--json', action='store_true')
    common.add_argument('--progress', action='store_true')
    common.add_argument('--timings', action='store_true',
                        help="include wall times in JSON output")
    common.add_argument('-v', '--verbose', action='count', default=0)

    parser = argparse.ArgumentParser(
        prog='zerosum', description="zero-sum constants of finite abelian "
        "groups, with Z_3^3 classifications")
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('constant', parents=[common],
                       help="compute D, D*, D_k, D_k*, D^k or D^k*")
    p.add_argument('--family', required=True)
    p.add_argument('--k', type=int)
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser('verify-table', parents=[common],
                       help="recompute the known constants of Z_3^3")
    p.set_defaults(func=cmd_verify_table)

    p = sub.add_parser('classify', parents=[common],
                       help="classifications over Z_3^3")
    p.add_argument('what', choices=['distinct', 'five-point', 'fourteen',
                                    'family', 'completeness'])
    p.add_argument('--size', type=int, default=8)
    p.add_argument('--k', type=int, default=3)
    p.add_argument('--reading', choices=atlas.READINGS, default='disjoint',
                   help="which 14-point multisets are extremal")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('af-verify', parents=[common],
                       help="no admissible labeling of ten-element sets")
    p.add_argument('--filter', choices=sorted(AF_FILTERS), default='paper',
                   help="'paper' (alias 'case-viii') checks the configurations"
                        " with the basis taken twice; 'full' every candidate")
    p.set_defaults(func=cmd_af_verify)

    p = sub.add_parser('find-zerosum', parents=[common],
                       help="zero-sum of a sequence over Z_3+Z_3+Z_3d")
    p.add_argument('--input', required=True, help="sequence file or -")
    p.set_defaults(func=cmd_find_zerosum)

    p = sub.add_parser('render', parents=[common],
                       help="sequence file to board")
    p.add_argument('--input', required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser('parse', parents=[common],
                       help="board file to sequence")
    p.add_argument('--input', required=True)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser('witness', parents=[common],
                       help="an extremal configuration")
    p.add_argument('--family')
    p.add_argument('--k', type=int)
    p.add_argument('--catalog', choices=sorted(catalog.BOARDS))
    p.set_defaults(func=cmd_witness)
    return parser

def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose,
                                                               2)]
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    budget = config.get_budget().replace(node_limit=args.node_limit,
                                         jobs=args.jobs)
    try:
        if args.command == 'witness' and not (args.catalog or args.family):
            parser.error("witness needs --family or --catalog")
        return args.func(args, budget)
    except SystemExit as e:
        return e.code
    except TheoremViolation as e:
        sys.stderr.write('zerosum: violation: %s\n' % (e,))
        return EXIT_VIOLATION
    except CacheMismatchError as e:
        sys.stderr.write('zerosum: cache mismatch: %s\n' % (e,))
        return EXIT_VIOLATION
    except BudgetExceeded as e:
        sys.stderr.write('zerosum: %s\n' % (e,))
        return EXIT_BUDGET
    except (BoardFormatError, GroupError, PreconditionError, ValueError,
            IOError) as e:
        sys.stderr.write('zerosum: %s\n' % (e,))
        return EXIT_USAGE
