import pytest

from oscext.algebra import ONE, Polynomial, RationalFunction, X
from oscext.extension import (
    bound_states,
    eigenfunction,
    exceptional_hermite,
    is_regular,
    potential,
    potential_from_wronskian,
    rational_extension,
    schrodinger_operator,
    vanishing_part,
)
from oscext.wronskians import hermite, wronskian_polynomial
from oscext.maya import MayaDiagram
from oscext.operators import LinearDifferentialOperator as LDO

TRIVIAL = MayaDiagram()
M12 = MayaDiagram([1, 2])
X2 = RationalFunction(X * X)


class TestPotential:
    def test_trivial(self):
        assert potential(TRIVIAL) == X2

    def test_translates(self):
        for n in (-3, 1, 2):
            assert potential(TRIVIAL.translate(n)) == X2 + 2 * n

    def test_two_step_extension(self):
        den = Polynomial([1, 0, 2]) ** 2  # (2x^2+1)^2
        expected = X2 + RationalFunction(32 * X * X, den) \
            - RationalFunction(Polynomial([8]), Polynomial([1, 0, 2])) + 4
        assert potential(M12) == expected

    def test_dual_routes_agree(self):
        for ks in [(), (0,), (1, 2), (-2, 0), (-3,), (0, 1, 2)]:
            m = MayaDiagram(ks)
            assert potential(m) == potential_from_wronskian(m), ks

    def test_covariance(self):
        for ks in [(), (1, 2), (-2,)]:
            m = MayaDiagram(ks)
            for n in range(-3, 4):
                assert potential(m.translate(n)) == potential(m) + 2 * n

    def test_rational_term_decays(self):
        for ks in [(1, 2), (-2, 0), (0, 1, 2)]:
            rest = vanishing_part(MayaDiagram(ks))
            assert rest.num.degree < rest.den.degree


class TestSchrodingerOperator:
    def test_trivial(self):
        assert schrodinger_operator(TRIVIAL) == LDO((X2, 0, -1))

    def test_shape(self):
        op = schrodinger_operator(M12)
        assert op.order == 2
        assert op.coefficient(2) == -1
        assert op.coefficient(1).is_zero
        assert op.coefficient(0) == potential(M12)

    def test_translation_covariance(self):
        for n in (1, -2):
            lhs = schrodinger_operator(M12.translate(n))
            rhs = schrodinger_operator(M12) + LDO.identity() * (2 * n)
            assert lhs == rhs

    def test_extension_record(self):
        ext = rational_extension(M12)
        assert ext.diagram == M12
        assert ext.h_polynomial == wronskian_polynomial(M12)
        assert ext.hamiltonian == schrodinger_operator(M12)


class TestEigenfunction:
    def test_trivial_ground_state(self):
        state = eigenfunction(TRIVIAL, 0)
        assert state.function.gauge == -1
        assert state.function.body == RationalFunction(ONE)
        assert state.epsilon == -1
        assert state.bound

    def test_trivial_matches_seeds_up_to_factor(self):
        for k in range(0, 5):
            body = eigenfunction(TRIVIAL, k).function.body
            ratio = body / RationalFunction(hermite(k))
            assert ratio.is_polynomial and ratio.num.degree == 0

    def test_two_step_ground_state(self):
        state = eigenfunction(M12, 0)
        assert state.function.gauge == -1
        expected = RationalFunction(
            wronskian_polynomial(MayaDiagram([0, 1, 2])),
            wronskian_polynomial(M12),
        )
        assert state.function.body == expected

    def test_epsilon_rule(self):
        assert eigenfunction(M12, 1).epsilon == +1
        assert eigenfunction(M12, 0).epsilon == -1
        assert eigenfunction(M12, -3).epsilon == +1

    def test_eigen_relation_family(self):
        for ks in [(), (1,), (1, 2), (-2, 0), (-3,)]:
            m = MayaDiagram(ks)
            op = schrodinger_operator(m)
            for k in range(-4, 6):
                f = eigenfunction(m, k).function
                assert op.apply(f) == f * (2 * k + 1), (ks, k)

    def test_negative_level_bound_state(self):
        # a pure translate has bound states below zero
        m = TRIVIAL.translate(-2)
        state = eigenfunction(m, -1)
        assert state.bound
        assert state.function.body.is_polynomial


class TestRegularity:
    def test_examples(self):
        assert is_regular(TRIVIAL)
        assert is_regular(M12)
        assert not is_regular(MayaDiagram([1]))

    def test_matches_sturm(self):
        from oscext.algebra import sturm_real_roots
        for ks in [(), (1,), (1, 2), (2,), (-2,), (-2, 0), (0, 1, 2), (1, 3)]:
            m = MayaDiagram(ks)
            roots = sturm_real_roots(wronskian_polynomial(m))
            assert is_regular(m) == (roots == 0), ks


class TestBoundStates:
    def test_trivial(self):
        assert bound_states(TRIVIAL, 0, 3) == [0, 1, 2, 3]

    def test_two_step(self):
        assert bound_states(M12, 0, 4) == [0, 3, 4]

    def test_refuses_singular(self):
        singular = MayaDiagram([1])  # odd filled block
        with pytest.raises(ValueError):
            bound_states(singular, 0, 3)
        # the combinatorial content of the empty boxes is still visible
        assert [k for k in range(0, 4) if k not in singular] == [0, 2, 3]

    def test_happy_path_one_gap_translate(self):
        m = MayaDiagram([1, 2])  # regular two-step window
        assert bound_states(m, -2, 2) == [0]

    def test_rejects_empty_window(self):
        with pytest.raises(ValueError):
            bound_states(TRIVIAL, 2, 1)


class TestExceptionalHermite:
    def test_trivial_reduces_to_hermite(self):
        for k in range(5):
            assert exceptional_hermite(TRIVIAL, k) == hermite(k)

    def test_two_step_values(self):
        assert exceptional_hermite(M12, 0) == \
            wronskian_polynomial(MayaDiagram([0, 1, 2]))
        assert exceptional_hermite(M12, 3) == \
            wronskian_polynomial(MayaDiagram([1, 2, 3]))

    def test_rejects_occupied_level(self):
        with pytest.raises(ValueError):
            exceptional_hermite(M12, 1)

    def test_rejects_singular(self):
        with pytest.raises(ValueError):
            exceptional_hermite(MayaDiagram([1]), 0)
