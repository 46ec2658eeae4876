"""One-bit / factor-two approximation of the strong-interference outer bound.

For |b| > 1 the outer bound sits inside R1 <= C(P1),
R1 + R2 <= C((sqrt(|b|^2 P1) + sqrt(P2))^2) with corners A (MISO point)
and B.  When Q(1) >= 0 the scheme reaches C = (C(P1), C(|b|^2 P1 + P2) - C(P1))
at alpha = 1, and time sharing A-C is within the gaps below.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .achievable import lambda_costa_1, point_d
from .core import ChannelParams, DomainError, RatePair, SchemeParams, cap_c
from .outer import miso_power
from .regimes import q_alpha

GAP_TOL = 1e-12


@dataclass(frozen=True)
class CornerPoints:
    A: RatePair
    B: RatePair
    C: RatePair


@dataclass(frozen=True)
class GapCertificate:
    applicable: bool
    additive_ok: bool
    multiplicative_ok: bool
    additive_gap: float = float("nan")
    covered_gap: float = float("nan")


def _require_strong(ch: ChannelParams):
    if ch.b_mag <= 1:
        raise DomainError("gap results are stated for |b| > 1")


def corner_points(ch: ChannelParams) -> CornerPoints:
    _require_strong(ch)
    miso = cap_c(miso_power(ch))
    c1 = cap_c(ch.P1)
    return CornerPoints(
        A=RatePair(0.0, miso),
        B=RatePair(c1, miso - c1),
        C=RatePair(c1, cap_c(ch.b_mag ** 2 * ch.P1 + ch.P2) - c1),
    )


def additive_gap_value(x, P2):
    """R2(B) - R2(C) = C(2 sqrt(x P2) / (1 + x + P2)) with x = |b|^2 P1."""
    x = np.asarray(x, dtype=float)
    return cap_c(2 * np.sqrt(x * P2) / (1 + x + P2))


def additive_gap(ch: ChannelParams) -> float:
    _require_strong(ch)
    return float(additive_gap_value(ch.b_mag ** 2 * ch.P1, ch.P2))


def multiplicative_check(ch: ChannelParams) -> bool:
    """2 (R1(C) + R2(C)) >= R1(B) + R2(B), up to GAP_TOL rounding (equality
    is approached as the powers vanish with |b|^2 P1 = P2)."""
    _require_strong(ch)
    pts = corner_points(ch)
    return 2 * (pts.C.r1 + pts.C.r2) >= pts.B.r1 + pts.B.r2 - GAP_TOL


def satisfies_gap_condition(ch: ChannelParams) -> bool:
    """The condition needed to reach C at alpha = 1, i.e. Q(1) >= 0."""
    return q_alpha(ch, 1.0) >= 0


def gap_condition_equal_powers(P, a, b):
    """P(P+1)|1 - a|b||^2 >= (|b|^2 - 1)(P + 1 + |a|^2 P), vectorised (real or complex a)."""
    a = np.asarray(a)
    b = np.asarray(b, dtype=float)
    return P * (P + 1) * np.abs(1 - a * b) ** 2 >= (b ** 2 - 1) * (P + 1 + np.abs(a) ** 2 * P)


def gap_condition_region(P: float, a_range=(-5.0, 5.0), b_range=(0.0, 5.0),
                         resolution: int = 401):
    """Boolean grid of the equal-power condition, shape (len(b), len(a))."""
    if not P > 0:
        raise DomainError("P must be positive")
    if int(resolution) < 2:
        raise DomainError("resolution must be >= 2")
    a = np.linspace(*map(float, a_range), int(resolution))
    b = np.linspace(*map(float, b_range), int(resolution))
    A, B = np.meshgrid(a, b)
    return a, b, gap_condition_equal_powers(P, A, B)


def gap_certificate(ch: ChannelParams, samples: int = 101) -> GapCertificate:
    """Certify the one-bit and factor-two statements for this channel.

    The inner bound is time sharing between the MISO point A and the corner
    actually reached by the scheme at alpha = 1, lam = lam_Costa1.  The R2
    shortfall against the two-constraint envelope is checked on ``samples``
    values of R1.
    """
    if ch.b_mag <= 1 or not satisfies_gap_condition(ch):
        return GapCertificate(False, False, False)
    pts = corner_points(ch)
    gap = additive_gap(ch)
    reached = point_d(ch, SchemeParams(1.0, lambda_costa_1(ch, 1.0)))
    t = np.linspace(0.0, 1.0, int(samples))
    r1 = t * reached.r1
    envelope = pts.A.r2 - r1  # sum-rate line through A and B
    inner = pts.A.r2 + t * (reached.r2 - pts.A.r2)
    covered = float(np.max(envelope - inner))
    if reached.r1 < pts.C.r1 - 1e-9:
        covered = float("inf")
    additive_ok = gap <= 1 + GAP_TOL and covered <= gap + 1e-9
    return GapCertificate(True, bool(additive_ok), bool(multiplicative_check(ch)), gap, covered)
