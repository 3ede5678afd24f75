import json

import numpy as np
import pytest

from zerosum import catalog
from zerosum.group import GroupSpec, GroupMultiset
from zerosum.report import (dumps, witness_text, constant_document,
                            result_record, table_document, af_document,
                            forms_document)
from zerosum.search import ConstantQuery, ConstantResult
from zerosum.symmetry import canonical_form


def test_dumps_is_sorted_and_typed():
    spec = GroupSpec((3, 3))
    document = {'b': GroupMultiset.from_indices(spec, [1, 3]),
                'a': spec.element(1, 2),
                'c': set([3, 1]),
                'd': np.int64(7)}
    text = dumps(document)
    assert text.endswith('\n')
    assert list(json.loads(text)) == ['a', 'b', 'c', 'd']
    assert json.loads(text) == {'a': [1, 2], 'b': [[0, 1], [1, 0]],
                                'c': [1, 3], 'd': 7}
    with pytest.raises(TypeError):
        dumps({'x': object()})

def test_witness_text():
    A = catalog.board('D^4')
    assert witness_text(A) == catalog.BOARDS['D^4'][0].lstrip('\n')
    B = GroupMultiset.from_indices(GroupSpec((9,)), [1, 1])
    assert witness_text(B) == [[1], [1]]

def test_constant_document():
    q = ConstantQuery(GroupSpec((9,)), 'D')
    witness = GroupMultiset(GroupSpec((9,)), {1: 8})
    record = result_record(ConstantResult(q, 9, witness, None, 17))
    document = constant_document(q, record, wall_ms=12)
    assert document['value'] == 9
    assert document['query'] == {'group': [9], 'family': 'D', 'k': None}
    assert document['witness'] == [[1]] * 8
    assert document['node_count'] == 17
    assert document['wall_ms'] is None
    assert constant_document(q, record, 12, timings=True)['wall_ms'] == 12

def test_table_document():
    rows = [{'name': 'D^5', 'passed': True, 'wall_ms': 3},
            {'name': 'D^4', 'passed': False, 'wall_ms': 4}]
    document = table_document(rows)
    assert document['passed'] == 1
    assert document['failed'] == 1
    assert all(entry['wall_ms'] is None for entry in document['entries'])
    assert rows[0]['wall_ms'] == 3

def test_af_document():
    report = {'filter': 'case_viii', 'candidates': 97, 'systems': 679,
              'violations': [], 'certificates': [], 'wall_ms': 5,
              'counts': {'raw': 97, 'rotated': 41, 'orbits': 19}}
    document = af_document(report)
    assert document['counts'] == {'raw': 97, 'rotated': 41, 'orbits': 19,
                                  'violations': 0}
    assert document['published'] == {'raw': 84, 'rotated': 41, 'orbits': 16}
    assert document['violations'] == 0
    assert document['wall_ms'] is None

def test_forms_document():
    form = canonical_form(catalog.eight_point_set())
    document = forms_document('distinct-8', [form])
    assert document['orbits'] == 1
    assert document['stabilizers'] == [form.stabilizer_size]
    assert json.loads(dumps(document))['query'] == 'distinct-8'
