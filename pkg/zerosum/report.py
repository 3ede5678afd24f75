"""JSON documents for the command line.  Output is a function of the
inputs only: keys are sorted and timings are left out unless asked for."""
import json

import numpy as np

from . import catalog
from .boards import Z3_3, render_board
from .group import GroupElement, GroupMultiset


def _default(obj):
    if isinstance(obj, GroupMultiset):
        return [list(x.coords) for x in obj]
    if isinstance(obj, GroupElement):
        return list(obj.coords)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    raise TypeError("cannot serialize %r" % (obj,))

def dumps(document):
    return json.dumps(document, sort_keys=True, indent=2,
                      default=_default) + '\n'

def witness_text(A):
    if A.spec == Z3_3 and all(mult <= 9 for _, mult in A.index_items()):
        return render_board(A)
    return [list(x.coords) for x in A]

def _ms(value, timings):
    return value if timings else None

def constant_document(query, record, wall_ms=None, timings=False):
    """'record' is a cache record (or the same fields from a result)."""
    spec = query.group
    witness = GroupMultiset.from_elements(spec, record['witness'])
    return {'query': query.as_dict(),
            'value': record['value'],
            'method': record['method'],
            'witness': witness_text(witness),
            'orbits': record['witness_orbits'],
            'node_count': record['nodes'],
            'wall_ms': _ms(wall_ms, timings),
            'obstruction_certificates': []}

def result_record(result):
    return {'value': result.value, 'method': result.method,
            'witness': [list(x.coords) for x in result.witness],
            'witness_orbits': result.witness_orbits, 'nodes': result.nodes}

def table_document(rows, timings=False):
    entries = []
    for row in rows:
        row = dict(row)
        row['wall_ms'] = _ms(row.get('wall_ms'), timings)
        entries.append(row)
    return {'query': 'verify-table',
            'entries': entries,
            'passed': sum(1 for row in rows if row['passed']),
            'failed': sum(1 for row in rows if not row['passed'])}

def af_document(report, timings=False):
    document = {'query': {'af-verify': report['filter']},
                'candidates': report['candidates'],
                'systems': report['systems'],
                'violations': len(report['violations']),
                'violation_witnesses': report['violations'],
                'wall_ms': _ms(report['wall_ms'], timings),
                'obstruction_certificates': report['certificates']}
    if 'counts' in report:
        document['counts'] = dict(report['counts'],
                                  violations=len(report['violations']))
        document['published'] = dict(catalog.CASE_VIII_PUBLISHED)
    return document

def forms_document(query, forms, wall_ms=None, timings=False):
    return {'query': query,
            'orbits': len(forms),
            'witness': [witness_text(form.representative) for form in forms],
            'stabilizers': [form.stabilizer_size for form in forms],
            'wall_ms': _ms(wall_ms, timings)}
