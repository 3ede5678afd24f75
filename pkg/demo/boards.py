"""Print the catalog configurations of Z_3^3 together with what they
avoid."""
from zerosum import catalog
from zerosum.boards import render_board
from zerosum.engine import packing_number, min_zerosum_length
from zerosum.symmetry import canonical_form


for name in sorted(catalog.BOARDS):
    A = catalog.board(name)
    value = catalog.BOARDS[name][1]
    form = canonical_form(A)
    print('%s = %d: %d elements, shortest zero-sum %s, packing %d, '
          'orbit of %d' % (name, value, len(A), min_zerosum_length(A),
                           packing_number(A), form.orbit_size()))
    print(render_board(A))

A = catalog.eight_point_set()
print('the 8 points without a zero-sum of length <= 3:')
print(render_board(A))
