# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled ball-count kernels.

Encodings match _engine_py exactly: free words are bytes of letter codes
with inverse = code ^ 1, free-product words are bytes of (factor << 6) | exp
syllables, matrices are sign-normalized integer 4-tuples.  Counts and
truncation behaviour must be bit-identical to the pure twin; the test suite
compares them directly.
"""

from cpython.bytes cimport (
    PyBytes_AS_STRING,
    PyBytes_FromStringAndSize,
    PyBytes_GET_SIZE,
)
from libc.string cimport memcpy

cdef enum:
    MAT_LIMIT = 1073741824  # 2^30: products of two bounded entries stay in int64


def free_ball_counts(list gens, int n_max, long long cap, int workers=1):
    """Ball sizes in a free group; generators are reduced words as bytes."""
    cdef set seen = {b""}
    cdef list frontier = [b""]
    cdef list counts = [1]
    cdef list nxt
    cdef bytes w, g, c
    cdef const unsigned char *pw
    cdef const unsigned char *pg
    cdef char *pc
    cdef Py_ssize_t lw, lg, cut, m
    cdef int radius
    cdef bint over
    for radius in range(n_max):
        nxt = []
        over = False
        for w in frontier:
            pw = <const unsigned char *> PyBytes_AS_STRING(w)
            lw = PyBytes_GET_SIZE(w)
            for g in gens:
                pg = <const unsigned char *> PyBytes_AS_STRING(g)
                lg = PyBytes_GET_SIZE(g)
                m = lw if lw < lg else lg
                cut = 0
                while cut < m and (pw[lw - 1 - cut] ^ pg[cut]) == 1:
                    cut += 1
                c = PyBytes_FromStringAndSize(NULL, lw + lg - 2 * cut)
                pc = PyBytes_AS_STRING(c)
                if lw - cut > 0:
                    memcpy(pc, pw, lw - cut)
                if lg - cut > 0:
                    memcpy(pc + (lw - cut), pg + cut, lg - cut)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if <long long> len(seen) > cap:
                        over = True
                        break
            if over:
                break
        if over:
            return counts, True
        counts.append(counts[len(counts) - 1] + len(nxt))
        frontier = nxt
        if not frontier:
            while len(counts) <= n_max:
                counts.append(counts[len(counts) - 1])
            break
    return counts, False


def product_ball_counts(list gens, int p, int q, int n_max, long long cap,
                        int workers=1):
    """Ball sizes in Z/p * Z/q; generators are syllable words as bytes."""
    cdef int orders[2]
    orders[0] = p
    orders[1] = q
    cdef set seen = {b""}
    cdef list frontier = [b""]
    cdef list counts = [1]
    cdef list nxt
    cdef bytes w, g, c
    cdef const unsigned char *pw
    cdef const unsigned char *pg
    cdef Py_ssize_t lw, lg, pos, j
    cdef int fac, e
    cdef unsigned char s
    cdef unsigned char buf[4096]
    cdef int radius
    cdef bint over
    for radius in range(n_max):
        nxt = []
        over = False
        for w in frontier:
            pw = <const unsigned char *> PyBytes_AS_STRING(w)
            lw = PyBytes_GET_SIZE(w)
            for g in gens:
                pg = <const unsigned char *> PyBytes_AS_STRING(g)
                lg = PyBytes_GET_SIZE(g)
                if lw + lg > 4096:
                    raise OverflowError("word buffer exceeded")
                memcpy(buf, pw, lw)
                pos = lw
                for j in range(lg):
                    s = pg[j]
                    fac = s >> 6
                    if pos > 0 and (buf[pos - 1] >> 6) == fac:
                        e = ((buf[pos - 1] & 63) + (s & 63)) % orders[fac]
                        pos -= 1
                        if e:
                            buf[pos] = <unsigned char> ((fac << 6) | e)
                            pos += 1
                    else:
                        buf[pos] = s
                        pos += 1
                c = PyBytes_FromStringAndSize(<const char *> buf, pos)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if <long long> len(seen) > cap:
                        over = True
                        break
            if over:
                break
        if over:
            return counts, True
        counts.append(counts[len(counts) - 1] + len(nxt))
        frontier = nxt
        if not frontier:
            while len(counts) <= n_max:
                counts.append(counts[len(counts) - 1])
            break
    return counts, False


def matrix_ball_counts(list gens, int n_max, long long cap, int workers=1):
    """Ball sizes for integer 2x2 matrices mod sign.

    Raises OverflowError once any entry reaches 2^30; the caller reruns the
    arbitrary-precision twin.
    """
    cdef set seen = {(1, 0, 0, 1)}
    cdef list frontier = [(1, 0, 0, 1)]
    cdef list counts = [1]
    cdef list nxt
    cdef tuple w, g, c
    cdef long long a1, b1, c1, d1, a2, b2, c2, d2, ra, rb, rc, rd
    cdef int radius
    cdef bint over
    for g in gens:
        for v in g:
            if v >= MAT_LIMIT or v <= -MAT_LIMIT:
                raise OverflowError("matrix entries exceed the compiled range")
    for radius in range(n_max):
        nxt = []
        over = False
        for w in frontier:
            a1 = w[0]
            b1 = w[1]
            c1 = w[2]
            d1 = w[3]
            if (a1 >= MAT_LIMIT or a1 <= -MAT_LIMIT or b1 >= MAT_LIMIT
                    or b1 <= -MAT_LIMIT or c1 >= MAT_LIMIT or c1 <= -MAT_LIMIT
                    or d1 >= MAT_LIMIT or d1 <= -MAT_LIMIT):
                raise OverflowError("matrix entries exceed the compiled range")
            for g in gens:
                a2 = g[0]
                b2 = g[1]
                c2 = g[2]
                d2 = g[3]
                ra = a1 * a2 + b1 * c2
                rb = a1 * b2 + b1 * d2
                rc = c1 * a2 + d1 * c2
                rd = c1 * b2 + d1 * d2
                if ra < 0 or (ra == 0 and rb < 0):
                    ra = -ra
                    rb = -rb
                    rc = -rc
                    rd = -rd
                c = (ra, rb, rc, rd)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if <long long> len(seen) > cap:
                        over = True
                        break
            if over:
                break
        if over:
            return counts, True
        counts.append(counts[len(counts) - 1] + len(nxt))
        frontier = nxt
        if not frontier:
            while len(counts) <= n_max:
                counts.append(counts[len(counts) - 1])
            break
    return counts, False
