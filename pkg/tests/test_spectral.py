import random
from fractions import Fraction
from itertools import product

import pytest

from sepgamma import (Graph, Poly, PreconditionError, char_poly_adjacency,
                      classify, complete_graph, cycle_graph, empty_graph,
                      is_real_rooted, matching_poly, mu_poly, path_graph,
                      uniform_weights, verify_gamma_mu_bridge)

from conftest import atlas_graphs, random_graph


class TestMuPoly:
    def test_c4_unit_weights_gives_char_poly(self):
        assert mu_poly(cycle_graph(4), uniform_weights(cycle_graph(4), 1)) == \
            Poly([0, 0, -4, 0, 1])

    def test_c3_unit_weights(self):
        assert mu_poly(cycle_graph(3), uniform_weights(cycle_graph(3), 1)) == \
            Poly([-2, -3, 0, 1])

    def test_zero_weights_give_alpha(self):
        rng = random.Random(97)
        for _ in range(30):
            g = random_graph(rng, rng.randrange(1, 7), rng.random())
            assert mu_poly(g, uniform_weights(g, 0)) == matching_poly(g)

    def test_missing_weight(self):
        with pytest.raises(PreconditionError):
            mu_poly(cycle_graph(3), {})

    def test_rational_weights(self):
        g = cycle_graph(4)
        mu = mu_poly(g, uniform_weights(g, Fraction(1, 2)))
        assert mu == matching_poly(g) + Poly([-1])  # -2 * (1/2) * alpha(empty)


class TestCharPoly:
    def test_examples(self):
        assert char_poly_adjacency(complete_graph(3)) == Poly([-2, -3, 0, 1])
        assert char_poly_adjacency(cycle_graph(4)) == Poly([0, 0, -4, 0, 1])
        assert char_poly_adjacency(empty_graph(2)) == Poly([0, 0, 1])
        assert char_poly_adjacency(empty_graph(0)) == Poly([1])

    def test_against_leibniz_determinant(self):
        # independent oracle: permutation expansion of det(xI - A)
        from itertools import permutations
        rng = random.Random(101)

        def brute_char(g):
            n = g.n
            a = [[0] * n for _ in range(n)]
            for u, v in g.edges:
                a[u - 1][v - 1] = a[v - 1][u - 1] = 1
            total = Poly()
            for perm in permutations(range(n)):
                sign = 1
                seen = [False] * n
                for s in range(n):  # cycle-decomposition parity
                    if seen[s]:
                        continue
                    length, j = 0, s
                    while not seen[j]:
                        seen[j] = True
                        j = perm[j]
                        length += 1
                    if length % 2 == 0:
                        sign = -sign
                term = Poly([sign])
                for i in range(n):
                    if i == perm[i]:
                        term = term * Poly([-a[i][i], 1])
                    else:
                        term = term * Poly([-a[i][perm[i]]])
                total = total + term
            return total

        for _ in range(25):
            g = random_graph(rng, rng.randrange(1, 6), rng.random())
            assert char_poly_adjacency(g) == brute_char(g)

    def test_unit_mu_equals_char_poly_atlas6(self, atlas6):
        for g in atlas6:
            assert mu_poly(g, uniform_weights(g, 1)) == char_poly_adjacency(g)
            assert mu_poly(g, uniform_weights(g, 0)) == matching_poly(g)


class TestRealRootedMu:
    def test_cactus_grid_of_weights(self):
        # |t_i| <= 1 on the grid {-1, -1/2, 0, 1/2, 1}, every cactus class <= 7
        values = [Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2),
                  Fraction(1)]
        for g in atlas_graphs(7):
            cls = classify(g)
            if not cls.cactus or not cls.simple_cycles:
                continue
            cycles = cls.simple_cycles
            for combo in product(values, repeat=len(cycles)):
                weights = dict(zip(cycles, combo))
                assert is_real_rooted(mu_poly(g, weights))


class TestBridge:
    def test_examples(self):
        assert verify_gamma_mu_bridge(cycle_graph(4),
                                      [Fraction(i) for i in (1, 2, 3, 4, 5)])
        assert verify_gamma_mu_bridge(cycle_graph(6))
        assert verify_gamma_mu_bridge(path_graph(4))
        assert verify_gamma_mu_bridge(Graph.make(1, []))

    def test_zero_sample_rejected(self):
        with pytest.raises(PreconditionError):
            verify_gamma_mu_bridge(path_graph(3), [Fraction(0)])

    def test_non_cactus_rejected(self):
        with pytest.raises(PreconditionError):
            verify_gamma_mu_bridge(complete_graph(4))

    def test_rational_samples(self):
        assert verify_gamma_mu_bridge(
            cycle_graph(4), [Fraction(1, 2), Fraction(-3, 7), Fraction(5),
                             Fraction(2, 3), Fraction(-1)])
