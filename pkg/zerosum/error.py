
class ZerosumError(Exception):
    __module__ = 'zerosum'

class GroupError(ZerosumError):
    """ An error raised for an invalid group description or a malformed
    element of a group
    """
    __module__ = 'zerosum'

class SpecMismatchError(GroupError):
    __module__ = 'zerosum'
    def __str__(self):
        try:
            left, right = self.args[1], self.args[2]
            return '%s (%s versus %s)' % (self.args[0], left, right)
        except IndexError:
            return str(self.args[0])

class NotElementaryError(GroupError):
    """ An error raised when linear maps are requested over a group that is
    not elementary abelian
    """
    __module__ = 'zerosum'

class BudgetExceeded(ZerosumError):
    """ An error raised when a search or an enumeration would go past one of
    the configured limits
    """
    __module__ = 'zerosum'
    def __init__(self, budget, limit, message=None):
        ZerosumError.__init__(self, budget, limit, message)
        self.budget = budget
        self.limit = limit
    def __str__(self):
        msg = 'budget %r exceeded (limit %s)' % (self.budget, self.limit)
        if self.args[2]:
            msg = '%s: %s' % (msg, self.args[2])
        return msg

class DimensionError(ZerosumError):
    __module__ = 'zerosum'

class PreconditionError(ZerosumError):
    __module__ = 'zerosum'

class TheoremViolation(ZerosumError):
    """ A counterexample to a statement the library verifies.  'witness' is
    a dict describing it; 'dump' is the path of the saved input, if any
    """
    __module__ = 'zerosum'
    def __init__(self, message, witness=None, dump=None):
        ZerosumError.__init__(self, message)
        self.witness = witness or {}
        self.dump = dump
    def __str__(self):
        msg = self.args[0]
        if self.dump:
            msg = '%s (input saved to %s)' % (msg, self.dump)
        return msg

class BoardFormatError(ZerosumError):
    __module__ = 'zerosum'
    def __str__(self):
        try:
            return 'line %d: %s' % (self.args[1], self.args[0])
        except IndexError:
            return str(self.args[0])

class SequenceFormatError(BoardFormatError):
    __module__ = 'zerosum'

class CacheMismatchError(ZerosumError):
    """ An error raised when a recomputed result disagrees with the value
    stored in the result cache
    """
    __module__ = 'zerosum'

class CertificateError(ZerosumError):
    """ An error raised when a claimed zero-sum certificate does not check
    out against its parent multiset
    """
    __module__ = 'zerosum'
