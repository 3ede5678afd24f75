__all__ = ['GroupSpec', 'GroupElement', 'GroupMultiset', 'ZerosumQuery',
           'find_zerosum', 'max_disjoint_zerosums', 'canonical_form',
           'smith_normal_form', 'ConstantQuery', 'compute_constant',
           'ZerosumError', 'BudgetExceeded', 'TheoremViolation']

from .group import GroupSpec, GroupElement, GroupMultiset
from .engine import ZerosumQuery, find_zerosum, max_disjoint_zerosums
from .symmetry import canonical_form
from .intlinalg import smith_normal_form
from .search import ConstantQuery, compute_constant
from .error import ZerosumError, BudgetExceeded, TheoremViolation
from .config import ALGORITHM_REVISION

__version__ = "0.3.0"
__version_info__ = (0, 3, 0)

# Cached results are keyed by this string.  Bump ALGORITHM_REVISION in
# config.py when a search changes what it computes.
CODE_VERSION = "%s+%s" % (__version__, ALGORITHM_REVISION)
