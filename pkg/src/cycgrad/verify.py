"""Combined symbolic and numeric verification run used by ``cycgrad verify``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .exactness import ExactnessReport, exactness_witness
from .oracle import NumericReport, numeric_suite


@dataclass
class VerifyReport:
    exactness: ExactnessReport
    numeric: list[NumericReport] = field(default_factory=list)

    @property
    def numeric_failures(self) -> int:
        return sum(not r.passed for r in self.numeric)

    @property
    def failures(self) -> int:
        return self.exactness.total_failures + self.numeric_failures

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        lines = [self.exactness.summary()]
        if self.numeric:
            total = Counter(r.quantity for r in self.numeric)
            bad = Counter(r.quantity for r in self.numeric if not r.passed)
            lines.append("numeric:")
            for q in total:
                lines.append(f"  {q}: {total[q] - bad[q]}/{total[q]} pass")
        lines.append(f"failures: {self.failures}")
        return "\n".join(lines)


def run_verify(
    trials: int,
    max_degree: int = 5,
    n: int = 2,
    seed: int = 0,
    numeric_m: int | None = None,
) -> VerifyReport:
    report = VerifyReport(exactness_witness(trials, max_degree, seed, n))
    if numeric_m is not None:
        report.numeric = numeric_suite(trials, numeric_m, n, min(max_degree, 4), seed)
    return report
