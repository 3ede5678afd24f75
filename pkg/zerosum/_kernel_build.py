import os
from cffi import FFI

_here = os.path.dirname(os.path.abspath(__file__))
_csrc = os.path.join(os.path.dirname(_here), 'c')

ffibuilder = FFI()
ffibuilder.cdef("""
    int zs_extend_reach(const int32_t *add, int n, int x, int copies,
                        int max_len, uint8_t *table, uint8_t *scratch);
    int zs_lexmin_image(const uint16_t *inverse, int nmaps, int n,
                        const uint8_t *mult, uint8_t *best);
""")

ffibuilder.set_source("zerosum._zskernel", """
    #include "zskernel.h"
""",
    sources=[os.path.relpath(os.path.join(_csrc, 'zskernel.c'))],
    include_dirs=[_csrc])

if __name__ == '__main__':
    ffibuilder.compile(verbose=True)
