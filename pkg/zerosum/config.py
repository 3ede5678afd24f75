"""Budgets and switches.

Every limit has a default here, may be overridden from the environment
(ZEROSUM_MAX_ORDER, ZEROSUM_MAX_SIZE, ZEROSUM_NODE_LIMIT, ZEROSUM_JOBS) and
finally from the command line.
"""
import os

ALGORITHM_REVISION = 'r1'

# groups up to this order keep multiplicities in a dense vector
DENSE_LIMIT = 4096
# addition tables are materialized up to this order
TABLE_LIMIT = 1024


class Budget(object):
    _fields_ = ('max_order', 'max_size', 'node_limit', 'subset_guard',
                'packing_guard', 'zerosum_list_guard', 'gl_limit', 'jobs')

    def __init__(self, max_order=4096, max_size=40, node_limit=10**9,
                 subset_guard=24, packing_guard=40, zerosum_list_guard=16,
                 gl_limit=10**6, jobs=1):
        self.max_order = max_order
        self.max_size = max_size
        self.node_limit = node_limit
        self.subset_guard = subset_guard
        self.packing_guard = packing_guard
        self.zerosum_list_guard = zerosum_list_guard
        self.gl_limit = gl_limit
        self.jobs = jobs

    def replace(self, **kwds):
        values = dict((name, getattr(self, name)) for name in self._fields_)
        for key, value in kwds.items():
            if key not in values:
                raise TypeError("unknown budget %r" % (key,))
            if value is not None:
                values[key] = value
        return Budget(**values)

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in self._fields_)

    def __repr__(self):
        return '<Budget %s>' % ', '.join('%s=%r' % (name, getattr(self, name))
                                         for name in self._fields_)


_ENVIRON = [('ZEROSUM_MAX_ORDER', 'max_order'),
            ('ZEROSUM_MAX_SIZE', 'max_size'),
            ('ZEROSUM_NODE_LIMIT', 'node_limit'),
            ('ZEROSUM_JOBS', 'jobs')]

def from_environ(environ=None, base=None):
    if environ is None:
        environ = os.environ
    budget = base or Budget()
    overrides = {}
    for varname, field in _ENVIRON:
        text = environ.get(varname)
        if text:
            try:
                overrides[field] = int(text)
            except ValueError:
                raise ValueError("%s must be an integer, got %r"
                                 % (varname, text))
    return budget.replace(**overrides)

def kernel_disabled(environ=None):
    if environ is None:
        environ = os.environ
    return bool(environ.get('ZEROSUM_NO_KERNEL'))

DEFAULT = from_environ()

def get_budget(budget=None):
    if budget is None:
        return DEFAULT
    return budget
