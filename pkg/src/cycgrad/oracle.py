"""Floating-point cross-checks on matrix tuples.

Polynomials are evaluated by substituting ``X_j -> A_j``.  Two facts are
checked numerically:

* the trace of any commutator vanishes, while ``theta(v)`` evaluates to the
  zero matrix only when ``theta(v)`` is symbolically zero;
* the directional derivative of ``A -> tr p(A)`` along ``H`` equals
  ``sum_j tr(H_j delta_j p(A))``.

Tolerances are relative to ``scale(p, A) = sum_w |c_w| prod_i ||A_i||_F``,
which bounds the Frobenius norm of ``p(A)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra import AlgebraContext, GradientVec, Poly
from .calculus import cyclic_gradient, theta
from .errors import DimensionMismatchError
from .generators import random_gradient_tuple, random_poly, random_tuple, trial_rng

ALGEBRAIC_RTOL = 1e-9
FD_RTOL = 1e-5
FD_STEP = 1e-4
MAX_DIMENSION = 8
MAX_DEGREE = 6


@dataclass(frozen=True, eq=False)
class MatrixTuple:
    """``n`` real ``m x m`` matrices."""

    matrices: tuple[np.ndarray, ...]

    def __init__(self, matrices: Sequence[np.ndarray]):
        mats = tuple(np.asarray(a, dtype=float) for a in matrices)
        if not mats:
            raise DimensionMismatchError("need at least one matrix")
        m = mats[0].shape[0]
        for a in mats:
            if a.shape != (m, m):
                raise DimensionMismatchError(f"expected {m}x{m} matrices, got shape {a.shape}")
        object.__setattr__(self, "matrices", mats)

    @property
    def m(self) -> int:
        return self.matrices[0].shape[0]

    @property
    def n(self) -> int:
        return len(self.matrices)

    def __getitem__(self, j):
        return self.matrices[j]

    def __len__(self):
        return len(self.matrices)

    def shifted(self, t: float, directions: "MatrixTuple") -> "MatrixTuple":
        return MatrixTuple([a + t * h for a, h in zip(self.matrices, directions.matrices)])


@dataclass(frozen=True)
class NumericReport:
    quantity: str
    deviation: float
    tolerance: float
    passed: bool | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        ok = bool(self.deviation <= self.tolerance)
        if self.passed is None:
            object.__setattr__(self, "passed", ok)
        elif self.passed != ok:
            raise ValueError("pass flag must equal deviation <= tolerance")


def random_matrix_tuple(rng: np.random.Generator, n: int, m: int) -> MatrixTuple:
    """Entries uniform in ``[-1, 1]``."""
    return MatrixTuple([rng.uniform(-1.0, 1.0, size=(m, m)) for _ in range(n)])


def random_symmetric_directions(rng: np.random.Generator, n: int, m: int) -> MatrixTuple:
    mats = []
    for _ in range(n):
        b = rng.uniform(-1.0, 1.0, size=(m, m))
        mats.append((b + b.T) / 2)
    return MatrixTuple(mats)


def _check_dims(p_ctx: AlgebraContext, A: MatrixTuple):
    if A.n != p_ctx.n:
        raise DimensionMismatchError(f"{A.n} matrices supplied for n={p_ctx.n} indeterminates")


def evaluate(p: Poly, A: MatrixTuple) -> np.ndarray:
    _check_dims(p.ctx, A)
    eye = np.eye(A.m)
    out = np.zeros((A.m, A.m))
    for w, c in p.terms.items():
        prod = eye
        for i in w:
            prod = prod @ A[i - 1]
        out += float(c) * prod
    return out


def scale(p: Poly, A: MatrixTuple) -> float:
    norms = [np.linalg.norm(a) for a in A.matrices]
    m_root = math.sqrt(A.m)
    total = 0.0
    for w, c in p.terms.items():
        # ||I||_F = sqrt(m) for the empty word
        term = m_root if not w else math.prod(norms[i - 1] for i in w)
        total += abs(float(c)) * term
    return total


def trace_obstruction_check(v: GradientVec, A: MatrixTuple, rtol: float = ALGEBRAIC_RTOL) -> NumericReport:
    """Evaluate ``sum_j [A_j, P_j(A)]`` numerically, entry by entry of ``v``.

    The trace must vanish for every ``v``; the whole matrix must vanish when
    ``theta(v)`` is symbolically zero.  ``deviation`` is the larger of the
    facets that are required to vanish.
    """
    _check_dims(v.ctx, A)
    mat = np.zeros((A.m, A.m))
    s = 0.0
    for j, pj in enumerate(v.entries):
        pa = evaluate(pj, A)
        mat += A[j] @ pa - pa @ A[j]
        s += 2 * np.linalg.norm(A[j]) * scale(pj, A)
    s *= math.sqrt(A.m)
    matrix_dev = float(np.max(np.abs(mat)))
    trace_dev = abs(float(np.trace(mat)))
    symbolic_zero = theta(v).is_zero()
    deviation = max(matrix_dev, trace_dev) if symbolic_zero else trace_dev
    return NumericReport(
        "theta_obstruction",
        deviation,
        rtol * s,
        metadata={
            "m": A.m,
            "degree": max((p.degree for p in v.entries), default=-1),
            "symbolic_zero": symbolic_zero,
            "matrix_deviation": matrix_dev,
            "trace_deviation": trace_dev,
            "scale": s,
        },
    )


def commutator_trace_check(a: Poly, b: Poly, A: MatrixTuple, rtol: float = ALGEBRAIC_RTOL) -> NumericReport:
    comm = a.commutator(b)
    tr = abs(float(np.trace(evaluate(comm, A))))
    s = scale(a, A) * scale(b, A)
    return NumericReport(
        "commutator_trace", tr, rtol * s, metadata={"m": A.m, "degree": comm.degree, "scale": s}
    )


def homomorphism_check(a: Poly, b: Poly, A: MatrixTuple, rtol: float = ALGEBRAIC_RTOL) -> NumericReport:
    diff = evaluate(a * b, A) - evaluate(a, A) @ evaluate(b, A)
    dev = float(np.max(np.abs(diff))) if diff.size else 0.0
    s = scale(a, A) * scale(b, A)
    return NumericReport("evaluation_homomorphism", dev, rtol * s, metadata={"m": A.m, "scale": s})


def trace_directional_derivative(p: Poly, A: MatrixTuple, H: MatrixTuple, h: float = FD_STEP) -> float:
    """Central difference of ``t -> tr p(A + tH)`` at ``t = 0``."""
    if not h > 0:
        raise ValueError(f"step size must be positive, got {h}")
    plus = np.trace(evaluate(p, A.shifted(h, H)))
    minus = np.trace(evaluate(p, A.shifted(-h, H)))
    return float((plus - minus) / (2 * h))


def gradient_pairing(p: Poly, A: MatrixTuple, H: MatrixTuple) -> float:
    """``sum_j tr(H_j delta_j p(A))``."""
    return float(sum(np.trace(H[j] @ evaluate(dp, A)) for j, dp in enumerate(cyclic_gradient(p))))


def finite_difference_gradient_check(
    p: Poly,
    A: MatrixTuple,
    h: float = FD_STEP,
    H: MatrixTuple | None = None,
    seed: int = 0,
    rtol: float = FD_RTOL,
) -> NumericReport:
    """Compare the central difference of ``tr p`` along ``H`` with the cyclic-gradient pairing.

    ``H`` defaults to seeded random symmetric directions.  The deviation is
    ``|fd - exact| / max(1, |exact|)``: relative for large derivatives,
    absolute near zero (kernel elements have exact derivative 0).
    """
    if not h > 0:
        raise ValueError(f"step size must be positive, got {h}")
    _check_dims(p.ctx, A)
    if H is None:
        H = random_symmetric_directions(np.random.default_rng(seed), A.n, A.m)
    elif H.n != A.n or H.m != A.m:
        raise DimensionMismatchError("directions must match the evaluation point")
    fd = trace_directional_derivative(p, A, H, h)
    exact = gradient_pairing(p, A, H)
    dev = abs(fd - exact) / max(1.0, abs(exact))
    return NumericReport(
        "fd_trace_gradient",
        dev,
        rtol,
        metadata={
            "m": A.m,
            "degree": p.degree,
            "seed": seed,
            "h": h,
            "finite_difference": fd,
            "cyclic_gradient_pairing": exact,
        },
    )


def numeric_suite(
    trials: int,
    m: int,
    n: int = 2,
    max_degree: int = 4,
    seed: int = 0,
    h: float = FD_STEP,
) -> list[NumericReport]:
    """Per trial: a finite-difference check, two obstruction checks, one commutator trace."""
    if not 1 <= m <= MAX_DIMENSION:
        raise ValueError(f"matrix dimension must be in 1..{MAX_DIMENSION}, got {m}")
    if not 1 <= max_degree <= MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {max_degree}")
    ctx = AlgebraContext(n)
    reports: list[NumericReport] = []
    for t in range(trials):
        rng = trial_rng(seed, t)
        nrng = np.random.default_rng([abs(seed), t])
        A = random_matrix_tuple(nrng, n, m)
        H = random_symmetric_directions(nrng, n, m)
        meta = {"seed": seed, "trial": t}

        p = random_poly(rng, ctx, max_degree)
        reports.append(_tag(finite_difference_gradient_check(p, A, h, H, seed), meta))
        grad = random_gradient_tuple(rng, ctx, max_degree - 1)
        reports.append(_tag(trace_obstruction_check(grad, A), meta))
        reports.append(_tag(trace_obstruction_check(random_tuple(rng, ctx, max_degree - 1), A), meta))
        a = random_poly(rng, ctx, max_degree // 2 + 1)
        b = random_poly(rng, ctx, max_degree // 2 + 1)
        reports.append(_tag(commutator_trace_check(a, b, A), meta))
    return reports


def _tag(r: NumericReport, meta: dict) -> NumericReport:
    return NumericReport(r.quantity, r.deviation, r.tolerance, r.passed, {**r.metadata, **meta})
