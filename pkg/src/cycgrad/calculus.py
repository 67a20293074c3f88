"""Difference quotients, cyclic derivatives, the number operator and friends.

For a word ``w = X_{i_1}...X_{i_k}``:

* ``partial_diff(j, w)`` sums ``prefix (x) suffix`` over every position holding ``j``;
* ``cyclic_derivative(j, w)`` sums ``suffix . prefix`` over the same positions,
  i.e. the rotation that deletes that occurrence;
* ``cyclic_symmetrize(w)`` sums all ``k`` rotations, with multiplicity.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import GradientVec, Poly, TensorPoly, Word, _accumulate
from .errors import ArityMismatchError

__all__ = [
    "partial_diff",
    "cyclic_derivative",
    "cyclic_gradient",
    "number_operator",
    "cyclic_symmetrize",
    "theta",
    "left_multiply_sum",
    "split_first_letter",
    "rotations",
]


def rotations(w: Word) -> list[Word]:
    """All ``len(w)`` left rotations of ``w``, starting with ``w`` itself."""
    return [w[r:] + w[:r] for r in range(len(w))]


def partial_diff(j: int, p: Poly) -> TensorPoly:
    p.ctx.check_index(j)
    acc: dict = {}
    for w, c in p.terms.items():
        for pos, i in enumerate(w):
            if i == j:
                _accumulate(acc, (w[:pos], w[pos + 1 :]), c)
    return TensorPoly._raw(p.ctx, acc)


def cyclic_derivative(j: int, p: Poly) -> Poly:
    """``delta_j p``; computed directly from the monomial rotation formula."""
    p.ctx.check_index(j)
    acc: dict[Word, Fraction] = {}
    for w, c in p.terms.items():
        for pos, i in enumerate(w):
            if i == j:
                _accumulate(acc, w[pos + 1 :] + w[:pos], c)
    return Poly._raw(p.ctx, acc)


def cyclic_gradient(p: Poly) -> GradientVec:
    # one pass over the terms fills all n entries
    accs: list[dict] = [{} for _ in range(p.ctx.n)]
    for w, c in p.terms.items():
        for pos, i in enumerate(w):
            _accumulate(accs[i - 1], w[pos + 1 :] + w[:pos], c)
    return GradientVec(p.ctx, [Poly._raw(p.ctx, a) for a in accs])


def number_operator(p: Poly) -> Poly:
    return Poly._raw(p.ctx, {w: len(w) * c for w, c in p.terms.items() if w})


def cyclic_symmetrize(p: Poly) -> Poly:
    acc: dict[Word, Fraction] = {}
    for w, c in p.terms.items():
        for r in rotations(w):
            _accumulate(acc, r, c)
    return Poly._raw(p.ctx, acc)


def _check_tuple(v: GradientVec):
    if not isinstance(v, GradientVec):
        raise TypeError(f"expected GradientVec, got {type(v).__name__}")
    if len(v.entries) != v.ctx.n:
        raise ArityMismatchError(f"expected {v.ctx.n} entries, got {len(v.entries)}")


def theta(v: GradientVec) -> Poly:
    """The commutator map ``(P_j) -> sum_j [X_j, P_j]``."""
    _check_tuple(v)
    acc: dict[Word, Fraction] = {}
    for j, pj in enumerate(v.entries, start=1):
        for w, c in pj.terms.items():
            _accumulate(acc, (j,) + w, c)
            _accumulate(acc, w + (j,), -c)
    return Poly._raw(v.ctx, acc)


def left_multiply_sum(v: GradientVec) -> Poly:
    """``sum_j X_j P_j``."""
    _check_tuple(v)
    acc: dict[Word, Fraction] = {}
    for j, pj in enumerate(v.entries, start=1):
        for w, c in pj.terms.items():
            _accumulate(acc, (j,) + w, c)
    return Poly._raw(v.ctx, acc)


def split_first_letter(p: Poly) -> GradientVec:
    """Inverse of ``left_multiply_sum`` on polynomials without constant term.

    Returns ``(P_j)`` with ``p - p(0) = sum_j X_j P_j``.
    """
    accs: list[dict] = [{} for _ in range(p.ctx.n)]
    for w, c in p.terms.items():
        if w:
            accs[w[0] - 1][w[1:]] = c
    return GradientVec(p.ctx, [Poly._raw(p.ctx, a) for a in accs])
