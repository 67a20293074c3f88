"""Seeded random polynomials, tuples and kernel elements for property checks.

Words have a uniformly chosen length in ``0..max_degree`` and uniformly chosen
letters; coefficients are uniform integers in ``[-coeff_bound, coeff_bound]``.
"""

from __future__ import annotations

import random

from .algebra import AlgebraContext, GradientVec, Poly, Word
from .calculus import cyclic_gradient, cyclic_symmetrize, split_first_letter

__all__ = [
    "trial_rng",
    "random_word",
    "random_poly",
    "random_homogeneous_poly",
    "random_tuple",
    "random_gradient_tuple",
    "random_theta_kernel_tuple",
    "random_kernel_element",
]


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent generator for one trial, derived from the run seed."""
    return random.Random(f"cycgrad/{seed}/{trial}")


def random_word(rng: random.Random, n: int, length: int) -> Word:
    return tuple(rng.randint(1, n) for _ in range(length))


def random_poly(
    rng: random.Random,
    ctx: AlgebraContext,
    max_degree: int,
    max_terms: int = 6,
    coeff_bound: int = 5,
    min_degree: int = 0,
) -> Poly:
    terms: dict[Word, int] = {}
    for _ in range(rng.randint(0, max_terms)):
        w = random_word(rng, ctx.n, rng.randint(min_degree, max_degree))
        terms[w] = terms.get(w, 0) + rng.randint(-coeff_bound, coeff_bound)
    return Poly(ctx, terms)


def random_homogeneous_poly(rng, ctx, degree, max_terms=6, coeff_bound=5) -> Poly:
    return random_poly(rng, ctx, degree, max_terms, coeff_bound, min_degree=degree)


def random_tuple(rng, ctx, max_degree, max_terms=4, coeff_bound=5) -> GradientVec:
    """Unstructured tuple; almost never a cyclic gradient."""
    return GradientVec(ctx, [random_poly(rng, ctx, max_degree, max_terms, coeff_bound) for _ in range(ctx.n)])


def random_gradient_tuple(rng, ctx, max_degree, max_terms=6, coeff_bound=5) -> GradientVec:
    """Cyclic gradient of a random polynomial of degree ``<= max_degree + 1``."""
    return cyclic_gradient(random_poly(rng, ctx, max_degree + 1, max_terms, coeff_bound))


def random_theta_kernel_tuple(rng, ctx, max_degree, max_terms=4, coeff_bound=5) -> GradientVec:
    """A tuple with vanishing commutator sum, built without taking any gradient.

    Splitting a rotation-invariant polynomial ``Q = sum_j X_j P_j`` by first
    letter yields ``P_j`` whose coefficients satisfy the cyclic relation that
    makes ``sum_j [X_j, P_j]`` cancel term by term.
    """
    q = cyclic_symmetrize(random_poly(rng, ctx, max_degree + 1, max_terms, coeff_bound, min_degree=1))
    return split_first_letter(q)


def random_kernel_element(rng, ctx, max_degree, max_terms=3, coeff_bound=5) -> Poly:
    """Constant plus a sum of general commutators ``[a, b]`` of total degree ``<= max_degree``."""
    p = ctx.const(rng.randint(-coeff_bound, coeff_bound))
    for _ in range(rng.randint(0, max_terms)):
        da = rng.randint(0, max_degree)
        a = random_poly(rng, ctx, da, 2, coeff_bound)
        b = random_poly(rng, ctx, max_degree - da, 2, coeff_bound)
        p = p + a.commutator(b)
    return p
