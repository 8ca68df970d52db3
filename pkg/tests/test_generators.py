import random

import pytest

from helpers import random_2degenerate
from signedcirc.errors import NonSimpleInput, NotPositiveEdge
from signedcirc.generators import (complete, cycle, f_u, f_uv, fu_vertex_map, gamma_star, omega,
                                   path, s_of, t2_of)
from signedcirc.graph import (NEG, POS, SignedGraph, cycle_sign, degeneracy_order, is_bipartite,
                              is_equivalent, simplify)


def negatives(g):
    return {(u, v) for u, v, s in g.edges if s == NEG}


class TestBasicFamilies:
    def test_complete(self):
        assert complete(3) == SignedGraph(3, ((0, 1, POS), (0, 2, POS), (1, 2, POS)))
        assert all(s == NEG for _, _, s in complete(4, "-").edges)

    def test_cycle(self):
        assert cycle(4, "+++-").edges == ((0, 1, POS), (0, 3, NEG), (1, 2, POS), (2, 3, POS))
        digon = cycle(2, "+-")
        assert digon.edges == ((0, 1, POS), (0, 1, NEG))

    def test_pattern_length(self):
        with pytest.raises(ValueError):
            cycle(3, "++")


class TestOmega:
    def test_omega1(self):
        assert omega(1) == complete(3)

    def test_omega2_negative_edges(self):
        g = omega(2)
        assert (g.n, g.m) == (5, 7)
        # v3 v5 is the only negative edge
        assert negatives(g) == {(2, 4)}

    def test_omega3_negative_edges(self):
        g = omega(3)
        assert (g.n, g.m) == (7, 11)
        # v6v3, v3v5, v5v7
        assert negatives(g) == {(2, 5), (2, 4), (4, 6)}

    def test_omega4_negative_edges(self):
        # negative: v6v3, v3v5, v5v7, v7v9, v8v5
        assert negatives(omega(4)) == {(2, 5), (2, 4), (4, 6), (6, 8), (4, 7)}

    @pytest.mark.parametrize("i", range(1, 11))
    def test_counts_and_degeneracy(self, i):
        g = omega(i)
        assert (g.n, g.m) == (2 * i + 1, 4 * i - 1)
        assert g.is_simple()
        degeneracy_order(g, 2)


class TestGammaStar:
    def test_gamma_star2_is_negative_c4(self):
        g = gamma_star(2)
        assert (g.n, g.m) == (4, 4)
        assert len(negatives(g)) == 1
        assert is_equivalent(g, SignedGraph(4, ((0, 3, POS), (1, 3, POS), (0, 2, POS), (1, 2, NEG))))[0]
        walk = [(0, 3, POS), (3, 1, NEG), (1, 2, POS), (2, 0, POS)]
        assert cycle_sign(g, walk) == NEG

    def test_gamma_star3(self):
        g = gamma_star(3)
        assert (g.n, g.m) == (6, 8)
        assert is_bipartite(g)[0]

    @pytest.mark.parametrize("i", range(2, 7))
    def test_bipartite(self, i):
        g = gamma_star(i)
        assert (g.n, g.m) == (2 * i, 4 * i - 4)
        assert is_bipartite(g)[0]


class TestSOf:
    def test_triangle(self):
        g = s_of(complete(3))
        assert (g.n, g.m) == (9, 12)
        assert is_bipartite(g)[0]
        for i, (u, v, _) in enumerate(complete(3).edges):
            a, b = 3 + 2 * i, 3 + 2 * i + 1
            walk = [(u, a, POS), (a, v, POS), (v, b, POS), (b, u, NEG)]
            assert cycle_sign(g, walk) == NEG

    def test_single_edge_is_negative_c4(self):
        g = s_of(path(2))
        assert (g.n, g.m) == (4, 4) and len(negatives(g)) == 1

    def test_k4_counts(self):
        g = s_of(complete(4))
        assert (g.n, g.m) == (16, 24)

    def test_one_part_has_degree_two(self):
        rng = random.Random(2)
        for _ in range(20):
            base = random_2degenerate(rng, rng.randint(2, 9))
            g = s_of(base)
            ok, parts = is_bipartite(g)
            assert ok
            new = range(base.n, g.n)
            assert all(g.degree(v) == 2 for v in new)

    def test_non_simple(self):
        with pytest.raises(NonSimpleInput):
            s_of(cycle(2, "++"))


class TestT2:
    def test_triangle(self):
        g = t2_of(complete(3))
        assert (g.n, g.m) == (6, 6)
        # product of the three path signs, each the negation of +
        walk = [(0, 3, NEG), (3, 1, POS), (1, 5, NEG), (5, 2, POS), (2, 4, POS), (4, 0, NEG)]
        assert cycle_sign(g, walk) == NEG

    def test_path_sign_rule(self):
        rng = random.Random(4)
        for _ in range(20):
            base = random_2degenerate(rng, rng.randint(2, 8))
            g = t2_of(base)
            for i, (u, v, s) in enumerate(base.edges):
                mid = base.n + i
                s1, = g.signs_between(u, mid)
                s2, = g.signs_between(mid, v)
                assert s1 * s2 == s.flip()

    def test_negative_c4_becomes_negative_8_cycle(self):
        base = cycle(4, "+++-")
        g = t2_of(base)
        assert (g.n, g.m) == (8, 8)
        walk = []
        order = [0, 1, 2, 3]
        for a, b in zip(order, order[1:] + order[:1]):
            idx = next(i for i, (u, v, _) in enumerate(base.edges) if {u, v} == {a, b})
            mid = base.n + idx
            walk += [(a, mid, g.signs_between(a, mid)[0]), (mid, b, g.signs_between(mid, b)[0])]
        assert cycle_sign(g, walk) == NEG


class TestFu:
    def test_triangle_positive_loop(self):
        g, z = f_u(complete(3), 0)
        assert (g.n, z) == (1, 0)
        assert g.has_loop(POS)

    def test_path_contracts_to_point(self):
        g, z = f_u(path(3), 1)
        assert g == SignedGraph(1) and z == 0

    def test_negative_c4(self):
        g, z = f_u(cycle(4, "+++-"), 0)
        assert g == SignedGraph(2, ((0, 1, POS),))
        assert z == 1
        mapping, _ = fu_vertex_map(cycle(4, "+++-"), 0)
        assert mapping == [1, 1, 0, 1]

    def test_digon_surfaces(self):
        # common neighbour 3 of 1 and 2 sees them with opposite signs
        g = SignedGraph(4, ((0, 1, POS), (0, 2, POS), (1, 3, POS), (2, 3, NEG)))
        out, _ = f_u(g, 0)
        assert simplify(out)[1].has_digon


class TestFuv:
    def test_single_edge(self):
        g = f_uv(path(2), 0, 1)
        assert (g.n, g.m) == (6, 9)
        u, v, u2, v2, x, y = range(6)
        expected = {(u, v, POS), (v, u2, POS), (u, v2, POS), (u2, v2, POS),
                    (u, x, POS), (v, y, POS), (u2, x, NEG), (v2, y, NEG), (x, y, NEG)}
        assert set(g.edges) == expected

    def test_triangle_counts(self):
        g = f_uv(complete(3), 0, 1)
        assert (g.n, g.m) == (7, 13)

    def test_negative_edge_rejected(self):
        with pytest.raises(NotPositiveEdge):
            f_uv(path(2, "-"), 0, 1)

    def test_non_simple_rejected(self):
        with pytest.raises(NonSimpleInput):
            f_uv(cycle(2, "++"), 0, 1)

    def test_copy_property(self):
        rng = random.Random(8)
        for _ in range(30):
            base = random_2degenerate(rng, rng.randint(2, 10))
            pos = [(u, v) for u, v, s in base.edges if s == POS]
            if not pos:
                continue
            u, v = rng.choice(pos)
            g = f_uv(base, u, v)
            assert g.m == base.m + base.degree(u) + base.degree(v) + 1 + 5
            restricted, _ = g.induced(range(base.n))
            assert restricted == base
            n = base.n
            assert sorted(w for w, _ in g.adjacency()[n] if w < n) == \
                sorted(w for w, _ in base.adjacency()[u])
