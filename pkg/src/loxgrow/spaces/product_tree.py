"""Free product of two finite cyclic groups acting on its Bass-Serre tree.

Elements are alternating syllable words ((factor, exp), ...) with factor in
{0, 1} and 1 <= exp < order[factor]; adjacent syllables use different
factors.  Tree vertices are cosets g<a> / g<b>, stored as (rep, side) where
rep is the syllable normal form of a shortest coset representative (it never
ends in a syllable of its own factor).  Edge stabilizers are trivial, so the
tree is 0-hyperbolic and torsion_bound defaults to 1.

The (2, 3) instance is the modular group PSL(2, Z) up to isomorphism.
"""

from ..errors import ConfigError
from .base import Backend, Classification, GroupElement, Point

_LETTERS = "ab"


class FreeProductTree(Backend):
    kind = "free_product_tree"

    def __init__(self, orders=(2, 3), delta=0.0, torsion_bound=1):
        p, q = orders
        if p < 2 or q < 2:
            raise ConfigError("factor orders must be >= 2")
        if p == 2 and q == 2:
            raise ConfigError("the (2, 2) free product is virtually cyclic; rejected")
        if p > 63 or q > 63:
            raise ConfigError("factor orders above 63 are not supported")
        self.orders = (int(p), int(q))
        self.delta = float(delta)
        self.torsion_bound = int(torsion_bound)

    def config(self):
        return {
            "kind": self.kind,
            "orders": list(self.orders),
            "delta": self.delta,
            "torsion_bound": self.torsion_bound,
        }

    # -- group algebra ------------------------------------------------------

    def _push(self, out, factor, exp):
        exp %= self.orders[factor]
        if out and out[-1][0] == factor:
            exp = (out[-1][1] + exp) % self.orders[factor]
            out.pop()
        if exp:
            out.append((factor, exp))

    def _compose(self, ca, cb):
        out = list(ca)
        for factor, exp in cb:
            self._push(out, factor, exp)
        return tuple(out)

    def _invert(self, ca):
        return tuple((f, self.orders[f] - e) for f, e in reversed(ca))

    def _identity_canonical(self):
        return ()

    def element(self, spec, word=None):
        if isinstance(spec, GroupElement):
            return spec
        out = []
        symbols = []
        for ch in spec:
            low = ch.lower()
            if low not in _LETTERS:
                raise ConfigError(f"unknown generator letter {ch!r} (use a/b)")
            factor = _LETTERS.index(low)
            exp = 1 if ch.islower() else self.orders[factor] - 1
            self._push(out, factor, exp)
            symbols.append((low, 1 if ch.islower() else -1))
        if word is None:
            word = tuple(symbols)
        return GroupElement(self, tuple(out), word)

    def sort_key(self, a):
        return (len(a.canonical), a.canonical)

    # -- Bass-Serre tree geometry -------------------------------------------

    def _strip(self, rep, side):
        if rep and rep[-1][0] == side:
            rep = rep[:-1]
        return rep

    def vertex(self, g, side):
        """Coset vertex g<factor_side>."""
        return Point(self, (self._strip(g.canonical, side), side))

    def origin(self):
        return Point(self, ((), 0))

    def _candidate_seeds(self):
        return [Point(self, ((), 0)), Point(self, ((), 1))]

    def apply(self, g, x):
        rep, side = x.data
        return Point(self, (self._strip(self._compose(g.canonical, rep), side), side))

    def dist(self, x, y):
        (ru, s), (rv, t) = x.data, y.data
        w = self._strip(self._compose(self._invert(ru), rv), t)
        if not w:
            return 0 if s == t else 1
        return len(w) + (0 if w[0][0] == s else 1)

    def _path_vertices(self, x, y):
        (ru, s), (rv, t) = x.data, y.data
        w = self._strip(self._compose(self._invert(ru), rv), t)
        verts = [((), s)]
        if not w:
            if s != t:
                verts.append(((), t))
        else:
            cur = ()
            if w[0][0] != s:
                verts.append(((), 1 - s))
            for f, e in w:
                cur = cur + ((f, e),)
                verts.append((cur, 1 - f))
        out = []
        for rep, side in verts:
            rep = self._strip(self._compose(ru, rep), side)
            out.append(Point(self, (rep, side)))
        return out

    def geodesic_point(self, x, y, t):
        path = self._path_vertices(x, y)
        ti = int(round(t))
        if abs(t - ti) > 1e-9 or ti < 0 or ti >= len(path):
            raise ValueError(f"t must be an integer in [0, {len(path) - 1}], got {t}")
        return path[ti]

    def _cyclic_reduce(self, ca):
        # first == last factor forces odd syllable length; one nontrivial merge
        # leaves an alternating word with distinct end factors
        ca = list(ca)
        while len(ca) >= 2 and ca[0][0] == ca[-1][0]:
            f = ca[0][0]
            e = (ca[0][1] + ca[-1][1]) % self.orders[f]
            ca = ca[1:-1]
            if e:
                ca.insert(0, (f, e))
                break
        return tuple(ca)

    def classify(self, g):
        if not g.canonical:
            return Classification("identity")
        if len(self._cyclic_reduce(g.canonical)) <= 1:
            return Classification("elliptic")
        return Classification("loxodromic")

    def translation_length(self, g):
        red = self._cyclic_reduce(g.canonical)
        return len(red) if len(red) >= 2 else 0

    def sample_points(self, rng, count, max_syllables=12):
        pts = []
        for _ in range(count):
            n = rng.randint(0, max_syllables)
            side = rng.randint(0, 1)
            word = []
            factor = rng.randint(0, 1)
            for _ in range(n):
                word.append((factor, rng.randint(1, self.orders[factor] - 1)))
                factor = 1 - factor
            pts.append(Point(self, (self._strip(tuple(word), side), side)))
        return pts

    def growth_encoding(self):
        return ("product_words", self.orders[0], self.orders[1])

    def canonical_bytes(self, canonical):
        return bytes((f << 6) | e for f, e in canonical)

    def subgroup_length_exact(self, S, g):
        need = {((0, e),) for e in range(1, self.orders[0])}
        need |= {((1, e),) for e in range(1, self.orders[1])}
        if {e.canonical for e in S} >= need:
            return len(g.canonical)
        return None
