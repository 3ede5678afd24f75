"""Text formats: the board picture of multisets over Z_3^3 and the
one-element-per-line sequence format used for every other group.

A board is three 3x3 squares side by side, square b holding the elements
(b, row, column).  The bottom line is row 0 and the leftmost column is
column 0, so the origin is the lower left cell of the leftmost square.
Cells read '.' (absent), 'X' (once) or a digit 2-9 (that many times).
"""
import re

from .error import BoardFormatError, SequenceFormatError, GroupError
from .group import GroupSpec, GroupMultiset

Z3_3 = GroupSpec((3, 3, 3))

_comment = re.compile(r'#.*$')


def _token(mult):
    if mult == 0:
        return '.'
    if mult == 1:
        return 'X'
    if mult <= 9:
        return str(mult)
    raise BoardFormatError("multiplicity %d does not fit a board cell"
                           % (mult,))

def _mult(token, lineno):
    if token == '.':
        return 0
    if token == 'X':
        return 1
    if len(token) == 1 and token in '23456789':
        return int(token)
    raise BoardFormatError("bad cell %r" % (token,), lineno)

def render_board(A):
    if A.spec != Z3_3:
        raise GroupError("boards only exist for Z_3^3, not %r" % (A.spec,))
    lines = []
    for row in (2, 1, 0):
        squares = []
        for board in range(3):
            squares.append(' '.join(
                _token(A.multiplicity((board, row, col)))
                for col in range(3)))
        lines.append('  '.join(squares))
    return '\n'.join(lines) + '\n'

def _board_lines(text):
    lines = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = _comment.sub('', line).strip()
        if line:
            lines.append((lineno, line.split()))
    return lines

def parse_board(text):
    """Parse a board, side by side (3 lines of 9 cells) or stacked (9 lines
    of 3 cells, square 0 first)."""
    lines = _board_lines(text)
    counts = {}
    if len(lines) == 3:
        for (lineno, tokens), row in zip(lines, (2, 1, 0)):
            if len(tokens) != 9:
                raise BoardFormatError("expected 9 cells, got %d"
                                       % len(tokens), lineno)
            for i, token in enumerate(tokens):
                counts[(i // 3, row, i % 3)] = _mult(token, lineno)
    elif len(lines) == 9:
        for i, (lineno, tokens) in enumerate(lines):
            if len(tokens) != 3:
                raise BoardFormatError("expected 3 cells, got %d"
                                       % len(tokens), lineno)
            board, row = i // 3, 2 - i % 3
            for col, token in enumerate(tokens):
                counts[(board, row, col)] = _mult(token, lineno)
    else:
        raise BoardFormatError("a board has 3 (or 9 stacked) lines, got %d"
                               % len(lines))
    return GroupMultiset(Z3_3, [(Z3_3.index_of(coords), mult)
                                for coords, mult in counts.items()])

# ____________________________________________________________

def parse_sequence(text, spec):
    """One element per line as comma-separated coordinates; '#' starts a
    comment.  Coordinates are reduced modulo the invariant factors."""
    elements = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = _comment.sub('', line).strip()
        if not line:
            continue
        parts = [part.strip() for part in line.split(',')]
        if len(parts) != spec.rank:
            raise SequenceFormatError("expected %d coordinates, got %d"
                                      % (spec.rank, len(parts)), lineno)
        try:
            coords = [int(part) for part in parts]
        except ValueError:
            raise SequenceFormatError("not an integer in %r" % (line,),
                                      lineno)
        elements.append(spec.element(*coords))
    return GroupMultiset.from_elements(spec, elements)

def render_sequence(A):
    lines = []
    for x, mult in A.items():
        lines.extend([','.join(str(c) for c in x.coords)] * mult)
    return ''.join(line + '\n' for line in lines)
