from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from cycgrad.algebra import AlgebraContext, GradientVec, Poly
from cycgrad.calculus import cyclic_gradient, cyclic_symmetrize, left_multiply_sum, number_operator, theta
from cycgrad.errors import NotAGradientError, NotInKernelError
from cycgrad.exactness import exactness_witness
from cycgrad.generators import random_theta_kernel_tuple, trial_rng
from cycgrad.solver import (
    anti_gradient,
    balanced_potential,
    canonical_rotation,
    check_gradient,
    condition_iv_holds,
    in_kernel,
    is_cyclic,
    kernel_decompose,
    reassemble,
    telescoping_decomposition,
)

from linalg_oracle import exists_potential, in_commutator_span
from strategies import polys, tuples, words


def P(n, terms):
    return Poly(AlgebraContext(n), terms)


def V(n, *entries):
    ctx = AlgebraContext(n)
    return GradientVec(ctx, [Poly(ctx, e) for e in entries])


class TestCanonicalRotation:
    @pytest.mark.parametrize(
        "word, rep, period",
        [((2, 1), (1, 2), 2), ((1, 2, 1, 2), (1, 2, 1, 2), 2), ((1, 1, 1), (1, 1, 1), 1), ((3, 1, 2), (1, 2, 3), 3)],
    )
    def test_examples(self, word, rep, period):
        key = canonical_rotation(word)
        assert (key.representative, key.period) == (rep, period)

    def test_empty(self):
        with pytest.raises(ValueError):
            canonical_rotation(())

    @given(words(3, 8, 1))
    def test_brute_force(self, w):
        rots = {w[r:] + w[:r] for r in range(len(w))}
        key = canonical_rotation(w)
        assert key.representative == min(rots)
        assert key.period == len(rots)
        assert len(w) % key.period == 0


class TestIsCyclic:
    def test_symmetrized(self):
        assert is_cyclic(P(2, {(1, 2): 1, (2, 1): 1}))

    def test_constant(self):
        assert not is_cyclic(P(2, {(): 1}))

    def test_lonely_word(self):
        assert not is_cyclic(P(2, {(1, 2): 1}))

    @given(polys(max_degree=5, min_degree=1))
    def test_image_of_C_is_cyclic(self, p):
        assert is_cyclic(cyclic_symmetrize(p))

    @given(polys(max_degree=4))
    def test_rotation_oracle(self, p):
        expected = not p.constant_term and all(
            p.coeff(w[r:] + w[:r]) == c for w, c in p.terms.items() for r in range(len(w))
        )
        assert is_cyclic(p) == expected


class TestAntiGradient:
    def test_periodic_quartic(self):
        v = V(2, {(2, 1, 2): 2}, {(1, 2, 1): 2})
        pot = anti_gradient(v)
        assert pot == P(2, {(1, 2, 1, 2): Fraction(1, 2), (2, 1, 2, 1): Fraction(1, 2)})
        assert cyclic_gradient(pot) == v

    def test_zero(self):
        assert anti_gradient(V(3, {}, {}, {})).is_zero()

    def test_swap(self):
        pot = anti_gradient(V(2, {(2,): 1}, {(1,): 1}))
        assert pot == P(2, {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 2)})

    def test_obstruction(self):
        with pytest.raises(NotAGradientError) as e:
            anti_gradient(V(2, {(2,): 1}, {}))
        assert e.value.obstruction == P(2, {(1, 2): 1, (2, 1): -1})

    @settings(max_examples=150)
    @given(polys(max_degree=5))
    def test_round_trip(self, p):
        p = p - p.constant_term
        g = cyclic_gradient(p)
        pot = anti_gradient(g)
        assert cyclic_gradient(pot) == g
        assert cyclic_symmetrize(pot - p).is_zero()
        assert pot.constant_term == 0
        assert is_cyclic(number_operator(pot)) or pot.is_zero()


class TestCheckGradient:
    def test_yes(self):
        cert = check_gradient(V(2, {(2,): 1}, {(1,): 1}))
        assert cert.is_gradient and cert.obstruction.is_zero()
        assert cyclic_gradient(cert.potential) == V(2, {(2,): 1}, {(1,): 1})

    def test_no(self):
        cert = check_gradient(V(2, {(2,): 1}, {}))
        assert not cert.is_gradient
        assert cert.obstruction == P(2, {(1, 2): 1, (2, 1): -1})
        assert cert.potential is None

    def test_constants(self):
        cert = check_gradient(V(3, {(): 2}, {(): Fraction(-1, 2)}, {(): 7}))
        assert cert.potential == P(3, {(1,): 2, (2,): Fraction(-1, 2), (3,): 7})


def _four_conditions(v):
    i = cyclic_gradient(balanced_potential(v)) == v
    ii = theta(v).is_zero()
    iii = is_cyclic(left_multiply_sum(v))
    iv = condition_iv_holds(v)
    return i, ii, iii, iv


class TestTheoremOneEquivalence:
    @settings(max_examples=200)
    @given(tuples(max_degree=3))
    def test_random_tuples(self, v):
        conds = _four_conditions(v)
        assert len(set(conds)) == 1, conds

    @settings(max_examples=100)
    @given(st.integers(1, 3), st.integers(0, 10_000))
    def test_constructed_theta_kernel_tuples(self, n, seed):
        v = random_theta_kernel_tuple(trial_rng(seed, 0), AlgebraContext(n), 3)
        assert _four_conditions(v) == (True, True, True, True)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 3).flatmap(lambda n: tuples(n, max_degree=2)))
    def test_linear_algebra_oracle(self, v):
        assert exists_potential(v) == theta(v).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(1, 2).flatmap(lambda n: polys(n, max_degree=4)))
    def test_linear_algebra_oracle_on_gradients(self, p):
        assert exists_potential(cyclic_gradient(p))


class TestKernel:
    def test_constant(self):
        assert in_kernel(P(2, {(): 7}))

    def test_commutator(self):
        assert in_kernel(P(2, {(1, 2): 1, (2, 1): -1}))

    def test_word(self):
        assert not in_kernel(P(2, {(1, 2): 1}))

    def test_decompose_commutator(self):
        d = kernel_decompose(P(2, {(1, 2): 1, (2, 1): -1}))
        assert d.constant == 0
        assert d.commutants == (P(2, {(2,): 1}), P(2, {}))

    def test_decompose_constant(self):
        d = kernel_decompose(P(2, {(): 5}))
        assert d.constant == 5
        assert all(q.is_zero() for q in d.commutants)

    def test_decompose_cubic(self):
        p = P(2, {(1, 1, 2): 1, (2, 1, 1): -1})
        d = kernel_decompose(p)
        assert reassemble(d) == p
        assert d.commutants == (P(2, {(1, 2): 1, (2, 1): 1}), P(2, {}))

    def test_refusal(self):
        with pytest.raises(NotInKernelError) as e:
            kernel_decompose(P(2, {(1, 2): 1}))
        assert e.value.obstruction == P(2, {(1, 2): 1, (2, 1): 1})

    @settings(max_examples=200)
    @given(polys(max_degree=5))
    def test_three_predicates_agree(self, p):
        by_grad = cyclic_gradient(p).is_zero()
        by_sym = cyclic_symmetrize(p).is_zero()
        by_decomp = reassemble(telescoping_decomposition(p)) == p
        assert by_grad == by_sym == by_decomp == in_kernel(p)

    @settings(max_examples=150)
    @given(polys(max_degree=4))
    def test_decomposes_difference_from_balanced_potential(self, p):
        q = p - anti_gradient(cyclic_gradient(p))
        assert in_kernel(q)
        d = kernel_decompose(q)
        assert d.constant == p.constant_term
        assert reassemble(d) == q

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 2).flatmap(lambda n: polys(n, max_degree=4)))
    def test_linear_algebra_oracle(self, p):
        assert in_commutator_span(p) == in_kernel(p)


class TestExactnessWitness:
    def test_zero_trials(self):
        r = exactness_witness(0, 3, 1)
        assert r.trials == 0 and r.total_failures == 0

    def test_hundred_trials(self):
        r = exactness_witness(100, 5, 42)
        assert r.passed, r.examples
        assert r.summary().count("100/100 pass") == 3

    @pytest.mark.parametrize("n", [1, 3, 4])
    def test_other_arities(self, n):
        assert exactness_witness(30, 4, 3, n).passed

    def test_single_cubic(self):
        assert theta(cyclic_gradient(P(2, {(1, 2, 1): 1}))).is_zero()
