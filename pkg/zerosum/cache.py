"""Append-only store of computed constants, one JSON document per line.

Records are keyed by (group, family, k, code version).  A value that is
recomputed must equal the stored one.
"""
import json
import logging
import time

try:
    import fcntl
except ImportError:
    fcntl = None

from . import CODE_VERSION
from .error import CacheMismatchError

log = logging.getLogger(__name__)


def cache_key(query, version=CODE_VERSION):
    return {'group': list(query.group.factors), 'family': query.family,
            'k': query.k, 'version': version}

def _key_string(key):
    return json.dumps(key, sort_keys=True)


class ResultCache(object):
    def __init__(self, path, version=CODE_VERSION):
        self.path = path
        self.version = version

    def _lock(self, f, exclusive):
        if fcntl is not None:
            fcntl.flock(f.fileno(), fcntl.LOCK_EX if exclusive
                        else fcntl.LOCK_SH)

    def records(self):
        try:
            f = open(self.path, 'r')
        except IOError:
            return []
        with f:
            self._lock(f, False)
            result = []
            for lineno, line in enumerate(f, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    result.append(json.loads(line))
                except ValueError:
                    raise CacheMismatchError("%s:%d: unreadable record"
                                             % (self.path, lineno))
            return result

    def lookup(self, query):
        wanted = _key_string(cache_key(query, self.version))
        found = None
        for record in self.records():
            if _key_string(record['key']) != wanted:
                continue
            if found is not None and found['value'] != record['value']:
                raise CacheMismatchError("conflicting records for %s in %s"
                                         % (wanted, self.path))
            found = record
        return found

    def store(self, query, result):
        record = {'key': cache_key(query, self.version),
                  'value': result.value,
                  'method': result.method,
                  'witness': [list(x.coords) for x in result.witness],
                  'witness_orbits': result.witness_orbits,
                  'nodes': result.nodes,
                  'timestamp': time.strftime('%Y-%m-%dT%H:%M:%SZ',
                                             time.gmtime())}
        with open(self.path, 'a') as f:
            self._lock(f, True)
            f.write(json.dumps(record, sort_keys=True) + '\n')
        return record

    def get_or_compute(self, query, compute, recompute=False):
        """The stored record for 'query', computing and storing it when
        missing.  With 'recompute' the value is computed anyway and checked
        against the stored one."""
        cached = self.lookup(query)
        if cached is not None and not recompute:
            log.info("cache hit for %r", query)
            return cached
        result = compute()
        if cached is not None:
            if cached['value'] != result.value:
                raise CacheMismatchError(
                    "%r: cached value %r, recomputed %r"
                    % (query, cached['value'], result.value))
            return cached
        return self.store(query, result)
