"""Deciding cyclic-gradient membership, rebuilding potentials, splitting kernels.

A tuple ``v = (P_1, ..., P_n)`` is a cyclic gradient exactly when
``theta(v) = sum_j [X_j, P_j]`` vanishes.  In that case ``Q = sum_j X_j P_j``
has coefficients constant on rotation classes, and scaling its degree-d part
by ``1/d`` gives a potential.

A polynomial has vanishing cyclic gradient exactly when its cyclic
symmetrization vanishes, i.e. when, above degree 0, the coefficients summed
over each rotation class are zero.  Such a polynomial is a constant plus a
sum of commutators ``[X_k, Q_k]``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .algebra import GradientVec, Poly, Word, _accumulate
from .calculus import (
    cyclic_derivative,
    cyclic_gradient,
    cyclic_symmetrize,
    left_multiply_sum,
    number_operator,
    theta,
)
from .errors import InternalConsistencyError, NotAGradientError, NotInKernelError

__all__ = [
    "CyclicClassKey",
    "GradientCertificate",
    "KernelDecomposition",
    "canonical_rotation",
    "is_cyclic",
    "check_gradient",
    "anti_gradient",
    "balanced_potential",
    "condition_iv_holds",
    "in_kernel",
    "kernel_decompose",
    "telescoping_decomposition",
    "reassemble",
]


@dataclass(frozen=True)
class CyclicClassKey:
    representative: Word
    period: int


def canonical_rotation(w: Word) -> CyclicClassKey:
    """Lexicographically least rotation of ``w`` and its number of distinct rotations.

    >>> canonical_rotation((2, 1))
    CyclicClassKey(representative=(1, 2), period=2)
    >>> canonical_rotation((1, 2, 1, 2))
    CyclicClassKey(representative=(1, 2, 1, 2), period=2)
    """
    w = tuple(w)
    if not w:
        raise ValueError("the empty word has no rotation class")
    k = len(w)
    # smallest shift that reproduces w; it always divides k
    period = next(r for r in range(1, k + 1) if w[r:] + w[:r] == w)
    rep = min(w[r:] + w[:r] for r in range(period))
    return CyclicClassKey(rep, period)


def _class_groups(p: Poly) -> dict[Word, dict[Word, Fraction]]:
    groups: dict[Word, dict[Word, Fraction]] = defaultdict(dict)
    for w, c in p.terms.items():
        if w:
            groups[canonical_rotation(w).representative][w] = c
    return groups


def is_cyclic(p: Poly) -> bool:
    """Membership in the span of cyclic symmetrizations of nonconstant words."""
    if p.constant_term:
        return False
    for rep, members in _class_groups(p).items():
        period = canonical_rotation(rep).period
        if len(members) != period or len(set(members.values())) != 1:
            return False
    return True


def balanced_potential(v: GradientVec) -> Poly:
    """``sum_d (1/d) * [sum_j X_j P_j]_d``, with no check that ``v`` is a gradient."""
    q = left_multiply_sum(v)
    return Poly._raw(v.ctx, {w: c / len(w) for w, c in q.terms.items()})


def condition_iv_holds(v: GradientVec) -> bool:
    """``delta_k(sum_j X_j P_j) == (N + I) P_k`` for every k."""
    q = left_multiply_sum(v)
    return all(
        cyclic_derivative(k, q) == number_operator(pk) + pk
        for k, pk in enumerate(v.entries, start=1)
    )


def anti_gradient(v: GradientVec) -> Poly:
    """Potential ``P`` with ``cyclic_gradient(P) == v``.

    Raises ``NotAGradientError`` carrying ``theta(v)`` if no potential exists.
    The result is the rotation-balanced choice: zero constant term and every
    rotation class carries a single coefficient.  Potentials are unique only
    up to the kernel of the cyclic gradient.
    """
    obstruction = theta(v)
    if obstruction:
        raise NotAGradientError(obstruction)
    pot = balanced_potential(v)
    if cyclic_gradient(pot) != v:
        raise InternalConsistencyError("gradient of reconstructed potential differs from input")
    return pot


@dataclass(frozen=True)
class GradientCertificate:
    is_gradient: bool
    obstruction: Poly
    potential: Poly | None = None

    def __post_init__(self):
        if self.is_gradient != self.obstruction.is_zero():
            raise ValueError("verdict must agree with a vanishing obstruction")
        if self.is_gradient != (self.potential is not None):
            raise ValueError("a potential is present exactly for positive verdicts")


def check_gradient(v: GradientVec) -> GradientCertificate:
    obstruction = theta(v)
    if obstruction:
        return GradientCertificate(False, obstruction)
    q = left_multiply_sum(v)
    if not is_cyclic(q):
        raise InternalConsistencyError("theta vanishes but sum X_j P_j is not cyclic")
    if not condition_iv_holds(v):
        raise InternalConsistencyError("theta vanishes but delta_k(sum X_j P_j) != (N+I) P_k")
    return GradientCertificate(True, obstruction, anti_gradient(v))


def in_kernel(p: Poly) -> bool:
    """Whether every cyclic derivative of ``p`` vanishes (decided via ``C(p) == 0``)."""
    by_sym = cyclic_symmetrize(p).is_zero()
    by_grad = cyclic_gradient(p).is_zero()
    if by_sym != by_grad:
        raise InternalConsistencyError(f"C(p)=0 is {by_sym} but delta(p)=0 is {by_grad}")
    return by_sym


@dataclass(frozen=True)
class KernelDecomposition:
    """``p = constant + sum_k [X_k, commutants[k-1]]``."""

    constant: Fraction
    commutants: tuple[Poly, ...]

    @property
    def ctx(self):
        return self.commutants[0].ctx

    def reassemble(self) -> Poly:
        return reassemble(self)


def reassemble(d: KernelDecomposition) -> Poly:
    ctx = d.ctx
    return ctx.const(d.constant) + theta(GradientVec(ctx, d.commutants))


def telescoping_decomposition(p: Poly) -> KernelDecomposition:
    """Write ``p`` as constant plus commutators, assuming class sums vanish.

    Each word ``w`` in the class of the least rotation ``u`` is reached from
    ``u`` by moving first letters to the back: ``u = a_0 v_0 -> v_0 a_0 = a_1 v_1
    -> ... -> w``.  Since ``a v - v a = [X_a, v]``, ``w - u = -sum_i [X_{a_i}, v_i]``,
    and the term ``c_w (w - u)`` adds ``-c_w v_i`` to ``Q_{a_i}``.  If the class
    coefficients do not sum to zero the leftover ``(sum c_w) u`` is silently
    dropped, so the reassembly differs from ``p``; ``kernel_decompose`` guards
    against that.
    """
    ctx = p.ctx
    accs: list[dict] = [{} for _ in range(ctx.n)]
    for rep, members in _class_groups(p).items():
        for w, c in members.items():
            cur = rep
            while cur != w:
                a, rest = cur[0], cur[1:]
                _accumulate(accs[a - 1], rest, -c)
                cur = rest + (a,)
    return KernelDecomposition(p.constant_term, tuple(Poly._raw(ctx, a) for a in accs))


def kernel_decompose(p: Poly) -> KernelDecomposition:
    """Constant and commutants witnessing ``p`` in ``Q.1 + sum_k [X_k, Q<n>]``.

    >>> from cycgrad.expr_io import parse_poly
    >>> d = kernel_decompose(parse_poly("X1*X2 - X2*X1", 2))
    >>> d.constant, [str(q) for q in d.commutants]
    (Fraction(0, 1), ['X2', '0'])
    """
    sym = cyclic_symmetrize(p)
    if sym:
        raise NotInKernelError(sym)
    d = telescoping_decomposition(p)
    if reassemble(d) != p:
        raise InternalConsistencyError("commutator decomposition does not reassemble")
    return d
