"""Configurations of Z_3^3 quoted from the literature on D(Z_3^3).

Boards use the layout of zerosum.boards.  The case lists further down are
coordinate tuples as usually printed, with coordinates ordered as
(board, column, row); read as group elements they differ from the board
pictures by a transposition, i.e. by a linear map.
"""
from .boards import Z3_3, parse_board
from .group import GroupMultiset

BOARDS = {
    # constant name -> (board of a largest configuration without the
    #                   structure, value of the constant)
    'D^4': ("""
. . .  . . .  . . .
2 X .  X . .  . . .
. 2 .  2 X .  . . .
""", 10),
    'D^5': ("""
. . .  . 2 .  . . .
2 . .  . . .  . . .
. 2 .  2 . .  . . .
""", 9),
    'D_2': ("""
. . .  . . .  . . .
2 X .  . X X  . . .
. 2 .  2 X .  . . .
""", 11),
    'D_2*': ("""
. . .  . X .  . . .
X . X  X X .  . . .
. X .  X X X  . . .
""", 10),
}

# the unique 8-element set without a zero-sum of length <= 3
EIGHT_POINT = """
. . .  . X .  . . .
X X .  . X .  X . .
. X .  X . X  . . .
"""

# the 14-point example as printed: only six doubled points are drawn
FOURTEEN_POINT_PRINTED = """
. . .  . . .  . 2 .
2 . .  . . .  2 . 2
. 2 .  2 . .  . . .
"""
FOURTEEN_POINT_MARKED = (1, 1, 1)


def board(name):
    return parse_board(BOARDS[name][0])

def eight_point_set():
    return parse_board(EIGHT_POINT)

def fourteen_point_printed():
    return parse_board(FOURTEEN_POINT_PRINTED)

# ____________________________________________________________
# ten-element configurations in the non-existence proof for labelings

X, Y, Z, W = (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)

# basis and (1,1,1) taken twice, two more points once; each with the
# 6x3 coefficient matrix (columns f(z), f(y), f(x)) that the two single
# points and their sum contribute
CASE_VI = [
    ([(0, 2, 1), (2, 1, 0)],
     [[1, 0, 0], [1, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 0], [1, 1, 0]]),
    ([(1, 1, 0), (1, 2, 1)],
     [[0, 0, 1], [0, 0, 1], [0, 0, 0], [0, 1, 0], [0, 1, 0], [1, 1, 0]]),
    ([(1, 1, 0), (1, 0, 1)],
     [[0, 0, 1], [0, 0, 1], [0, 1, 0], [0, 1, 0], [0, 0, 0], [1, 0, 0]]),
]

def case_vi_configuration(once):
    elements = [X, X, Y, Y, Z, Z, W, W] + list(once)
    return GroupMultiset.from_elements(Z3_3, elements)

# basis taken twice plus four single points, one per orbit
CASE_VIII_DOUBLED = [X, Y, Z]
CASE_VIII_QUADRUPLES = [
    [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)],
    [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 2)],
    [(0, 1, 1), (1, 0, 1), (1, 1, 1), (1, 1, 2)],
    [(0, 1, 1), (1, 0, 1), (1, 1, 1), (1, 2, 0)],
    [(0, 1, 1), (1, 0, 1), (1, 1, 2), (1, 2, 2)],
    [(0, 1, 1), (1, 0, 1), (1, 2, 0), (1, 2, 1)],
    [(0, 1, 1), (1, 0, 1), (1, 2, 0), (1, 2, 2)],
    [(0, 1, 1), (1, 0, 1), (1, 2, 1), (1, 2, 2)],
    [(0, 1, 1), (1, 0, 2), (1, 1, 1), (1, 1, 2)],
    [(0, 1, 1), (1, 0, 2), (1, 1, 1), (1, 2, 1)],
    [(0, 1, 1), (1, 0, 2), (1, 2, 0), (1, 2, 1)],
    [(0, 1, 1), (1, 0, 2), (1, 2, 0), (1, 2, 2)],
    [(0, 1, 1), (1, 0, 2), (1, 2, 1), (1, 2, 2)],
    [(0, 1, 1), (1, 0, 2), (2, 1, 0), (2, 1, 1)],
    [(0, 1, 1), (1, 0, 2), (2, 1, 0), (2, 1, 2)],
    [(0, 1, 1), (1, 0, 2), (2, 1, 1), (2, 1, 2)],
]

# counts printed next to the quadruples; the enumeration gives 97 raw
# configurations in 19 orbits, three of which have no quadruple above
CASE_VIII_PUBLISHED = {'raw': 84, 'rotated': 41, 'orbits': 16}

def case_viii_configuration(quadruple):
    elements = [x for x in CASE_VIII_DOUBLED for _ in range(2)]
    return GroupMultiset.from_elements(Z3_3, elements + list(quadruple))

# [v] is the lift of v to {0, 1, 2}; each table maps a to the value of
# its expression, always an integer
BRACKET_TABLES = {
    '(1-[-a]+[-1-a])/3': {0: 1, 1: 0, 2: 0},
    '(2-[-a]+[-2-a])/3': {0: 1, 1: 0, 2: 1},
    '(2+[-a]-[-1-a])/3': {0: 0, 1: 1, 2: 1},
}
