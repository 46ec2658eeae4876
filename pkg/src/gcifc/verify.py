"""Seeded oracle/invariant sweep behind ``gcifc verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .achievable import (
    DpcContext,
    achievable_caps,
    achievable_region,
    f_rate,
    lambda_costa,
    lambda_costa_1,
)
from .core import cap_c, support_gap
from .gap import additive_gap, multiplicative_check
from .lambda_opt import perturbation_rates, sum_rate_optimal_lambda
from .outer import outer_region
from .regimes import (
    is_primary_decodes_cognitive,
    is_very_strong,
    pdc_oracle,
    very_strong_oracle,
)
from .sampling import random_channels

# per-suite tolerances; a single override replaces all of them
TOLERANCES = {
    "costa_identity": 1e-12,
    "treat_as_noise": 1e-12,
    "containment": 1e-9,
    "very_strong_oracle": 0.0,
    "pdc_oracle": 0.0,
    "additive_gap": 1e-12,
    "multiplicative_gap": 0.0,
    "root_residual": 1e-9,
    "perturbation": 1e-9,
}

ROOT_ALPHAS = np.round(np.arange(1, 11) / 10, 10)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0

    def add(self, ok: bool):
        if ok:
            self.passed += 1
        else:
            self.failed += 1


@dataclass
class VerificationReport:
    seed: int
    num_channels: int
    suites: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.failed == 0 for s in self.suites)

    def text(self) -> str:
        lines = [f"gcifc verify seed={self.seed} channels={self.num_channels}"]
        for s in self.suites:
            status = "PASS" if s.failed == 0 else "FAIL"
            lines.append(f"{s.name}: {s.passed} passed, {s.failed} failed  {status}")
        lines.append("overall: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def run_verification(seed: int = 0, num_channels: int = 500, tolerance: float | None = None,
                     grid: int = 21) -> VerificationReport:
    rng = np.random.default_rng(seed)
    tol = dict(TOLERANCES)
    if tolerance is not None:
        tol = {k: tolerance for k in tol}
    report = VerificationReport(seed, num_channels)
    if num_channels <= 0:
        return report

    general = random_channels(rng, num_channels, b_range=(0.0, 5.0))
    strong = random_channels(rng, num_channels)
    alphas = rng.uniform(0, 1, num_channels)
    suites = {name: SuiteResult(name) for name in tol}

    for ch, al in zip(general, alphas):
        for h, s2 in ((ch.a, 1.0), (1.0 + ch.b_mag, 1.0 / (1.0 + ch.b_mag) ** 2)):
            ctx = DpcContext(h, s2, al * ch.P1, ch.P2)
            suites["costa_identity"].add(
                abs(f_rate(ctx, lambda_costa(ctx)) - cap_c(ctx.alphaP1 / s2)) <= tol["costa_identity"])
            suites["treat_as_noise"].add(
                abs(f_rate(ctx, 0) - cap_c(ctx.alphaP1 / (s2 + abs(h) ** 2 * ch.P2)))
                <= tol["treat_as_noise"])
        inner = achievable_region(ch, grid, grid)
        outer = outer_region(ch, grid)
        suites["containment"].add(support_gap(inner, outer) <= tol["containment"])

    for ch in strong:
        suites["very_strong_oracle"].add(
            is_very_strong(ch) == very_strong_oracle(ch, 101) and tol["very_strong_oracle"] >= 0)
        suites["pdc_oracle"].add(
            is_primary_decodes_cognitive(ch) == pdc_oracle(ch, 1001) and tol["pdc_oracle"] >= 0)
        suites["additive_gap"].add(additive_gap(ch) <= 1 + tol["additive_gap"])
        suites["multiplicative_gap"].add(multiplicative_check(ch) and tol["multiplicative_gap"] >= 0)
        if not is_very_strong(ch):
            for al in ROOT_ALPHAS:
                roots = sum_rate_optimal_lambda(ch, al)
                ok = len(roots) > 0
                for lam in roots:
                    r1, r2, s = achievable_caps(ch, al, lam)
                    ok &= abs(float(r1 + r2 - s)) <= tol["root_residual"]
                suites["root_residual"].add(ok)
        al = float(rng.uniform(0.05, 1.0))
        eps = 0.01 * np.exp(1j * rng.uniform(0, 2 * np.pi))
        pr = perturbation_rates(ch, al, eps)
        r1, r2, _ = achievable_caps(ch, al, lambda_costa_1(ch, al) + eps)
        suites["perturbation"].add(
            max(abs(pr.r1 - float(r1)), abs(pr.r2 - float(r2))) <= tol["perturbation"])

    report.suites = list(suites.values())
    return report
