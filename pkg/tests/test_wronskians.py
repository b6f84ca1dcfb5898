from itertools import combinations

import pytest

from oscext.algebra import ONE, QQ, GaugedRational, X
from oscext.wronskians import (
    HermiteCache,
    conjugate_hermite,
    hermite,
    normalized_wronskian,
    pseudo_wronskian,
    seed_function,
    wronskian_polynomial,
)
from oscext.maya import MayaDiagram

TRIVIAL = MayaDiagram()


class TestHermite:
    def test_first_values(self):
        assert hermite(0) == ONE
        assert hermite(1) == 2 * X
        assert hermite(2) == 4 * X * X - 2
        assert hermite(3) == 8 * X ** 3 - 12 * X

    def test_leading_coefficient(self):
        for n in range(9):
            p = hermite(n)
            assert p.degree == n
            assert p.leading_coefficient == QQ(2) ** n

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            hermite(-1)

    def test_three_term_recurrence(self):
        # independent relation not used to build the table
        for n in range(1, 10):
            assert hermite(n + 1) == 2 * X * hermite(n) - 2 * n * hermite(n - 1)


class TestConjugateHermite:
    def test_first_values(self):
        assert conjugate_hermite(1) == 2 * X
        assert conjugate_hermite(2) == 4 * X * X + 2
        assert conjugate_hermite(3) == 8 * X ** 3 + 12 * X

    def test_absolute_value_transform(self):
        for n in range(10):
            hs = hermite(n).coeffs
            ts = conjugate_hermite(n).coeffs
            assert len(hs) == len(ts)
            assert all(t == abs(h) for h, t in zip(hs, ts))

    def test_fresh_cache(self):
        cache = HermiteCache()
        assert cache.conjugate(4) == conjugate_hermite(4)
        assert cache.hermite(4) == hermite(4)


class TestSeedFunctions:
    def test_examples(self):
        assert seed_function(0) == GaugedRational(-1, ONE)
        assert seed_function(1) == GaugedRational(-1, 2 * X)
        assert seed_function(-1) == GaugedRational(+1, ONE)

    def test_oscillator_equation(self):
        # -psi'' + x^2 psi = (2n+1) psi for all integer levels
        for n in range(-6, 9):
            psi = seed_function(n)
            lhs = -psi.derivative().derivative() + psi * (X * X)
            assert lhs == psi * (2 * n + 1), n


class TestWronskianPolynomial:
    def test_examples(self):
        assert wronskian_polynomial(TRIVIAL) == ONE
        assert wronskian_polynomial(MayaDiagram([-1, 0])) == -2 * X
        assert wronskian_polynomial(MayaDiagram([1, 2])) == 8 * X * X + 4

    def test_translate_of_trivial_is_constant(self):
        for n in (-2, 1, 3):
            assert wronskian_polynomial(TRIVIAL.translate(n)).degree == 0


class TestPseudoWronskian:
    def test_examples(self):
        assert pseudo_wronskian(TRIVIAL) == ONE
        assert pseudo_wronskian(MayaDiagram([-2, 0])) == -(4 * X * X + 2)
        assert pseudo_wronskian(MayaDiagram([1, 2])) == 8 * X * X + 4

    def test_agreement_small_family(self):
        for size in range(4):
            for ks in combinations(range(-3, 4), size):
                m = MayaDiagram(ks)
                assert wronskian_polynomial(m) == pseudo_wronskian(m), m


class TestNormalizedWronskian:
    def test_examples(self):
        assert normalized_wronskian(TRIVIAL) == ONE
        assert normalized_wronskian(MayaDiagram([1, 2])) == 4 * X * X + 2
        assert normalized_wronskian(MayaDiagram([-2, 0])) == 4 * X * X + 2

    def test_translation_invariance_small(self):
        for ks in [(), (0,), (1, 2), (-2, 0), (-3, 1), (0, 1, 3)]:
            m = MayaDiagram(ks)
            base = normalized_wronskian(m)
            for n in range(-3, 4):
                assert normalized_wronskian(m.translate(n)) == base, (ks, n)

    def test_degree_matches_wronskian(self):
        for ks in [(1, 2), (-2, 0), (0, 2, 3)]:
            m = MayaDiagram(ks)
            assert normalized_wronskian(m).degree == wronskian_polynomial(m).degree
