"""Bridge between integer matrices and the (2, 3) free-product normal form.

PSL(2, Z) is generated by the order-2 rotation S = [[0, -1], [1, 0]] and the
order-3 element S*T (T = [[1, 1], [0, 1]] the unit translation).  With
a -> S and b -> S*T one has T = a*b in PSL(2, Z), so the classical
continued-fraction decomposition M = T^{q1} S T^{q2} S ... T^{qr} yields an
(a, b)-word whose syllable reduction is the normal form.
"""

from ..errors import NotInGroup
from .product_tree import FreeProductTree

S_MAT = ((0, -1), (1, 0))
T_MAT = ((1, 1), (0, 1))

_P23 = FreeProductTree((2, 3))


def _t_syllables(m):
    # T = ab, T^-1 = b^2 a  (inverse of ab with a^2 = 1, b^3 = 1)
    if m >= 0:
        return ((0, 1), (1, 1)) * m
    return ((1, 2), (0, 1)) * (-m)


def psl2z_normal_form(matrix):
    """Alternating (a, b)-syllable word equal to ``matrix`` projectively.

    ``matrix`` is a 2x2 integer matrix with determinant 1 (nested sequence or
    the canonical 4-tuple).  Returns the syllable tuple ((factor, exp), ...)
    with factor 0 of order 2 and factor 1 of order 3.
    """
    if hasattr(matrix, "canonical"):
        matrix = matrix.canonical
    try:
        (a, b), (c, d) = matrix
    except (TypeError, ValueError):
        a, b, c, d = matrix
    for v in (a, b, c, d):
        if not isinstance(v, int) or isinstance(v, bool):
            raise NotInGroup(f"integer matrix required, got entry {v!r}")
    if a * d - b * c != 1:
        raise NotInGroup(f"determinant {a * d - b * c} != 1")

    syll = ()
    while c != 0:
        # peel M = T^q S M'; rounding the quotient halves |c| each step
        q = (2 * a + c) // (2 * c)
        syll = _P23._compose(syll, _t_syllables(q) + ((0, 1),))
        a, b, c, d = -c, -d, a - q * c, b - q * d
    # now M = +/- T^(a*b) with a == d == +/-1
    syll = _P23._compose(syll, _t_syllables(a * b))
    return syll


def syllables_to_matrix(syll):
    """Evaluate an (a, b)-syllable word back to the normalized integer matrix."""
    gens = {
        (0, 1): S_MAT,
        (1, 1): _mul(S_MAT, T_MAT),
        (1, 2): _mul(_mul(S_MAT, T_MAT), _mul(S_MAT, T_MAT)),
    }
    out = ((1, 0), (0, 1))
    for f, e in syll:
        out = _mul(out, gens[(f, e if f == 1 else 1)])
    return _normalize(out)


def _mul(m1, m2):
    (a1, b1), (c1, d1) = m1
    (a2, b2), (c2, d2) = m2
    return ((a1 * a2 + b1 * c2, a1 * b2 + b1 * d2), (c1 * a2 + d1 * c2, c1 * b2 + d1 * d2))


def _normalize(m):
    (a, b), (c, d) = m
    for v in (a, b, c, d):
        if v != 0:
            if v < 0:
                return ((-a, -b), (-c, -d))
            break
    return ((a, b), (c, d))
