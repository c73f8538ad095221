"""Bass-Serre tree of Z/2 * Z/3: normal forms and tree distances.

The distance oracle here is an adjacency BFS built from scratch: a vertex is
a coset g<A> or g<B>, represented by the normal form with any trailing
syllable of its own factor stripped, and g<A> neighbors g·a<B> for a in A.
Only the group algebra is shared with the implementation under test.
"""

import random

import pytest

from loxgrow.errors import ConfigError
from loxgrow.spaces import FreeProductTree, Point


def _strip(backend, canon, side):
    if canon and canon[-1][0] == side:
        return canon[:-1]
    return canon


def _neighbors(backend, vert):
    rep, side = vert
    other = 1 - side
    out = []
    for exp in range(backend.orders[side]):
        g = backend._compose(rep, ((side, exp),) if exp else ())
        out.append((_strip(backend, g, other), other))
    return out


def bfs_dist(backend, u, v, limit=24):
    if u == v:
        return 0
    seen = {u}
    frontier = [u]
    for depth in range(1, limit + 1):
        nxt = []
        for w in frontier:
            for nb in _neighbors(backend, w):
                if nb == v:
                    return depth
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    raise AssertionError("BFS limit hit")


def test_factor_relations(pt23):
    b = pt23.element("b")
    assert pt23.is_identity(pt23.compose(b, pt23.element("bb")))
    a = pt23.element("a")
    assert pt23.is_identity(pt23.compose(a, a))


def test_rejects_dihedral_orders():
    with pytest.raises(ConfigError):
        FreeProductTree((2, 2))


def test_classify_by_cyclic_syllable_length(pt23):
    assert pt23.classify(pt23.element("ab")).kind == "loxodromic"
    assert pt23.classify(pt23.element("a")).kind == "elliptic"
    assert pt23.classify(pt23.element("b")).kind == "elliptic"
    # aba is conjugate to the elliptic b
    assert pt23.classify(pt23.element("aba")).kind == "elliptic"
    assert pt23.classify(pt23.element("")).kind == "identity"


def test_elliptic_fixes_its_vertex(pt23):
    a = pt23.element("a")
    vA = pt23.vertex(pt23.identity(), 0)
    assert pt23.apply(a, vA).data == vA.data


def test_dist_against_adjacency_bfs(pt23):
    vA = ((), 0)
    ab = pt23.element("ab")
    moved = pt23.apply(ab, Point(pt23, vA))
    assert pt23.dist(Point(pt23, vA), moved) == 2
    assert bfs_dist(pt23, vA, moved.data) == 2

    rng = random.Random(3)
    for _ in range(60):
        g = pt23.element("".join(rng.choice("ab") for _ in range(rng.randint(0, 6))))
        side = rng.randint(0, 1)
        u = ((), side)
        v = pt23.apply(g, Point(pt23, u)).data
        assert pt23.dist(Point(pt23, u), Point(pt23, v)) == bfs_dist(pt23, u, v)


def test_translation_length_via_orbit_minimum(pt23):
    ab = pt23.element("ab")
    assert pt23.translation_length(ab) == 2
    # tau is the orbit-displacement minimum over vertices near the origin
    best = min(
        pt23.dist(v, pt23.apply(ab, v))
        for g in ["", "a", "b", "bb", "ab", "ba", "bba", "abb"]
        for v in [pt23.vertex(pt23.element(g), 0), pt23.vertex(pt23.element(g), 1)]
    )
    assert best == 2
    assert pt23.translation_length(pt23.element("a")) == 0
    assert pt23.translation_length(pt23.element("abab")) == 4


def test_geodesic_point_midpoints(pt23):
    x = Point(pt23, ((), 0))
    y = pt23.apply(pt23.element("abab"), x)
    d = pt23.dist(x, y)
    for t in range(d + 1):
        p = pt23.geodesic_point(x, y, t)
        assert pt23.dist(x, p) == t
        assert pt23.dist(p, y) == d - t


def test_isometry_exact(pt23):
    rng = random.Random(9)
    for _ in range(200):
        x, y = pt23.sample_points(rng, 2)
        g = pt23.element("".join(rng.choice("ab") for _ in range(rng.randint(0, 8))))
        assert pt23.dist(pt23.apply(g, x), pt23.apply(g, y)) == pt23.dist(x, y)


def test_candidate_seeds_are_both_factor_vertices(pt23):
    seeds = pt23._candidate_seeds()
    assert {p.data for p in seeds} == {((), 0), ((), 1)}
