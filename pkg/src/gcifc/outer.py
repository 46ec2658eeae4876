"""Unified outer bound of the G-CIFC, per power split and over all splits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    ChannelParams,
    DomainError,
    RateConstraintSet,
    RatePair,
    RateRegion,
    _LN2,
    cap_c,
    region_from_constraints,
)

DEFAULT_ALPHA_GRID = 501
FIGURE_ALPHA_GRID = 2001


@dataclass(frozen=True)
class OuterBoundPoint:
    alpha: float
    constraints: RateConstraintSet


def _check_alpha(alpha):
    a = np.asarray(alpha, dtype=float)
    if np.any(~np.isfinite(a)) or np.any(a < 0) or np.any(a > 1):
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return a


def miso_power(ch: ChannelParams) -> float:
    """(sqrt(|b|^2 P1) + sqrt(P2))^2, the beamformed power at receiver 2."""
    return (ch.b_mag * np.sqrt(ch.P1) + np.sqrt(ch.P2)) ** 2


def outer_caps(ch: ChannelParams, alpha):
    """Vectorised outer-bound caps (r1_max, r2_max, sum_max) for an array of alpha."""
    alpha = _check_alpha(alpha)
    b2 = ch.b_mag ** 2
    abar = 1.0 - alpha
    r1 = np.log1p(alpha * ch.P1) / _LN2
    r2 = np.log1p(b2 * ch.P1 + ch.P2 + 2.0 * np.sqrt(abar * b2 * ch.P1 * ch.P2)) / _LN2
    correction = (np.log1p(max(1.0, b2) * alpha * ch.P1) - np.log1p(alpha * b2 * ch.P1)) / _LN2
    return r1, r2, r2 + correction


def outer_constraints(ch: ChannelParams, alpha: float) -> RateConstraintSet:
    r1, r2, s = outer_caps(ch, float(alpha))
    return RateConstraintSet(float(r1), float(r2), float(s))


def outer_bound_points(ch: ChannelParams, alphas) -> list[OuterBoundPoint]:
    return [OuterBoundPoint(float(a), outer_constraints(ch, a)) for a in np.atleast_1d(alphas)]


def outer_corner(ch: ChannelParams, alpha: float) -> RatePair:
    """Pareto corner of the outer pentagon at this alpha (the point "C" of the
    alpha-th outer pentagon)."""
    return outer_constraints(ch, alpha).corner()


def alpha_grid(n: int) -> np.ndarray:
    if int(n) < 2:
        raise DomainError(f"alpha grid needs at least 2 points, got {n}")
    return np.linspace(0.0, 1.0, int(n))


def outer_region(ch: ChannelParams, alpha_grid_size: int = DEFAULT_ALPHA_GRID) -> RateRegion:
    r1, r2, s = outer_caps(ch, alpha_grid(alpha_grid_size))
    return region_from_constraints(r1, r2, s)


def outer_envelope_strong(ch: ChannelParams) -> RateConstraintSet:
    """Two-constraint relaxation valid for |b| > 1:
    R1 <= C(P1), R1 + R2 <= C((sqrt(|b|^2 P1) + sqrt(P2))^2).
    The R2 cap is set equal to the sum cap (inactive)."""
    if ch.b_mag <= 1:
        raise DomainError("the two-constraint envelope is defined for |b| > 1")
    s = cap_c(miso_power(ch))
    return RateConstraintSet(cap_c(ch.P1), s, s)
