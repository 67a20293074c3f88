"""Randomized witness for exactness of  0 -> [K,K] -> K -> K^n -> K.

Three checks per trial, each with its own failure counter:

``theta_of_gradient``
    ``theta(grad p) == 0`` for a random ``p``.
``kernel_decomposes``
    a random element of ``Q.1 + [K, K]`` has zero gradient, zero cyclic
    symmetrization, and a commutator decomposition that reassembles exactly.
``theta_kernel_integrates``
    a random tuple in ``ker theta`` (a gradient plus an independently built
    cyclic perturbation) is the gradient of ``anti_gradient`` of itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraContext
from .calculus import cyclic_gradient, cyclic_symmetrize, theta
from .errors import CycGradError
from .expr_io import print_poly
from .generators import (
    random_gradient_tuple,
    random_kernel_element,
    random_poly,
    random_theta_kernel_tuple,
    trial_rng,
)
from .solver import anti_gradient, kernel_decompose

CHECKS = ("theta_of_gradient", "kernel_decomposes", "theta_kernel_integrates")


@dataclass
class ExactnessReport:
    trials: int
    max_degree: int
    n: int
    seed: int
    failures: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    examples: list[str] = field(default_factory=list)

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values())

    @property
    def passed(self) -> bool:
        return self.total_failures == 0

    def summary(self) -> str:
        lines = [f"exactness: {self.trials} trials, n={self.n}, max_degree={self.max_degree}, seed={self.seed}"]
        for name in CHECKS:
            bad = self.failures.get(name, 0)
            lines.append(f"  {name}: {self.trials - bad}/{self.trials} pass")
        return "\n".join(lines)


def _run_trial(ctx: AlgebraContext, max_degree: int, seed: int, trial: int) -> dict[str, str]:
    rng = trial_rng(seed, trial)
    bad: dict[str, str] = {}

    p = random_poly(rng, ctx, max_degree)
    if theta(cyclic_gradient(p)):
        bad["theta_of_gradient"] = print_poly(p)

    k = random_kernel_element(rng, ctx, max_degree)
    try:
        ok = cyclic_gradient(k).is_zero() and not cyclic_symmetrize(k)
        ok = ok and kernel_decompose(k).reassemble() == k
    except CycGradError:
        ok = False
    if not ok:
        bad["kernel_decomposes"] = print_poly(k)

    v = random_gradient_tuple(rng, ctx, max_degree - 1) + random_theta_kernel_tuple(rng, ctx, max_degree - 1)
    try:
        ok = cyclic_gradient(anti_gradient(v)) == v
    except CycGradError:
        ok = False
    if not ok:
        bad["theta_kernel_integrates"] = "; ".join(print_poly(e) for e in v)
    return bad


def exactness_witness(trials: int, max_degree: int, seed: int, n: int = 2) -> ExactnessReport:
    """Run ``trials`` seeded trials; failures are counted, never raised."""
    if trials < 0 or max_degree < 1:
        raise ValueError("trials must be >= 0 and max_degree >= 1")
    ctx = AlgebraContext(n)
    report = ExactnessReport(trials, max_degree, n, seed)
    for t in range(trials):
        for name, detail in _run_trial(ctx, max_degree, seed, t).items():
            report.failures[name] += 1
            report.examples.append(f"trial {t} {name}: {detail}")
    return report
