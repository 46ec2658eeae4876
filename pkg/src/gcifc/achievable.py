"""
DPC-based achievable region where the primary receiver decodes both codewords.

Transmitter 1 splits its power: a fraction alpha carries its own codeword
X1c, the rest beamforms X2.  U1c = X1c + lam * X2 is dirty-paper coded
against X2; receiver 1 decodes U1c, receiver 2 decodes (U1c, X2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ChannelParams,
    DomainError,
    RateConstraintSet,
    RatePair,
    RateRegion,
    SchemeParams,
    _LN2,
    region_from_constraints,
)
from .outer import alpha_grid as _alpha_grid

DEFAULT_LAMBDA_GRID = 201
DEFAULT_LAMBDA_SPAN = 2.0


@dataclass(frozen=True)
class DpcContext:
    """Decoder view X1c + h X2 + sigma Z with signal power alphaP1."""

    h: complex
    sigma2: float
    alphaP1: float
    P2: float

    def __post_init__(self):
        object.__setattr__(self, "h", complex(self.h))
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0):
            raise DomainError(f"sigma2 must be positive and finite, got {self.sigma2}")
        if not (self.alphaP1 >= 0 and self.P2 >= 0):
            raise DomainError("alphaP1 and P2 must be nonnegative")


@dataclass(frozen=True)
class AchievableRates:
    """Clamped constraint set plus the raw (possibly negative) R1/R2 caps."""

    scheme: SchemeParams
    constraints: RateConstraintSet
    r1_raw: float
    r2_raw: float


def _dpc_rate(alphaP1, P2, lam, gain, h, noise):
    """I(Y; U) - I(U; X2) in bits for Y = gain*X1c + h*X2 + Z, Var Z = noise.

    Written around the minimiser lam* so that lam = lam* is exact:
    C(|gain|^2 aP1/N) - log2(1 + P2 (|gain|^2 aP1 + N)^2 |lam - lam*|^2 / (N aP1 Var Y)).
    Entries with alphaP1 == 0 return 0 (callers guarantee lam == 0 there).
    """
    alphaP1 = np.asarray(alphaP1, dtype=float)
    lam = np.asarray(lam, dtype=complex)
    g2 = np.abs(gain) ** 2
    sig = g2 * alphaP1 + noise
    var_y = sig + np.abs(h) ** 2 * P2
    safe = np.where(alphaP1 > 0, alphaP1, 1.0)
    lam_star = alphaP1 * np.conj(gain) * h / sig
    penalty = P2 * sig ** 2 * np.abs(lam - lam_star) ** 2 / (noise * safe * var_y)
    out = (np.log1p(g2 * alphaP1 / noise) - np.log1p(penalty)) / _LN2
    return np.where(alphaP1 > 0, out, 0.0)


def lambda_costa(ctx: DpcContext) -> complex:
    return ctx.alphaP1 / (ctx.alphaP1 + ctx.sigma2) * ctx.h


def f_rate(ctx: DpcContext, lam: complex) -> float:
    """DPC rate f(h, sigma2; lam) in bits; maximal (= C(alphaP1/sigma2)) at lambda_costa."""
    lam = complex(lam)
    if ctx.alphaP1 == 0:
        if lam != 0:
            raise DomainError("with zero signal power lambda must be 0")
        return 0.0
    return float(_dpc_rate(ctx.alphaP1, ctx.P2, lam, 1.0, ctx.h, ctx.sigma2))


def _beam_ratio(ch: ChannelParams, alpha):
    """sqrt((1 - alpha) P1 / P2), the X2 weight in X1."""
    alpha = np.asarray(alpha, dtype=float)
    if np.any((alpha < 0) | (alpha > 1)):
        raise DomainError("alpha must lie in [0, 1]")
    if ch.P2 == 0:
        if np.any(alpha < 1):
            raise DomainError("P2 = 0 only admits alpha = 1")
        return np.zeros_like(alpha)
    return np.sqrt((1.0 - alpha) * ch.P1 / ch.P2)


def receiver1_context(ch: ChannelParams, alpha: float) -> DpcContext:
    s = float(_beam_ratio(ch, alpha))
    return DpcContext(ch.a + s, 1.0, alpha * ch.P1, ch.P2)


def receiver2_context(ch: ChannelParams, alpha: float) -> DpcContext:
    """Receiver 2 output scaled by 1/|b|; needs |b| > 0."""
    if ch.b_mag == 0:
        raise DomainError("receiver-2 context needs |b| > 0")
    s = float(_beam_ratio(ch, alpha))
    return DpcContext(1.0 / ch.b_mag + s, 1.0 / ch.b_mag ** 2, alpha * ch.P1, ch.P2)


def lambda_costa_1(ch: ChannelParams, alpha):
    """Costa coefficient for receiver 1 (vectorised over alpha)."""
    alpha = np.asarray(alpha, dtype=float)
    s = _beam_ratio(ch, alpha)
    ap = alpha * ch.P1
    out = ap * (ch.a + s) / (ap + 1.0)
    return complex(out) if out.ndim == 0 else out


def lambda_costa_2(ch: ChannelParams, alpha):
    """Costa coefficient for receiver 2; written without 1/|b| so |b| = 0 gives 0."""
    alpha = np.asarray(alpha, dtype=float)
    s = _beam_ratio(ch, alpha)
    ap = alpha * ch.P1
    b = ch.b_mag
    out = (ap * b * (1.0 + b * s) / (b * b * ap + 1.0)).astype(complex)
    return complex(out) if out.ndim == 0 else out


def achievable_caps(ch: ChannelParams, alpha, lam):
    """Raw (r1, r2, sum) caps, broadcasting alpha against lam."""
    alpha, lam = np.broadcast_arrays(np.asarray(alpha, dtype=float), np.asarray(lam, dtype=complex))
    s = _beam_ratio(ch, alpha)
    ap = alpha * ch.P1
    b = ch.b_mag
    total = ch.P2 + b * b * ch.P1 + 2.0 * np.sqrt((1.0 - alpha) * b * b * ch.P1 * ch.P2)
    sum_cap = np.log1p(total) / _LN2
    r1 = _dpc_rate(ap, ch.P2, lam, 1.0, ch.a + s, 1.0)
    r2 = sum_cap - _dpc_rate(ap, ch.P2, lam, b, 1.0 + b * s, 1.0)
    return r1, r2, sum_cap


def _check_scheme(ch: ChannelParams, s: SchemeParams):
    if s.alpha * ch.P1 == 0 and s.lam != 0:
        raise DomainError("alpha * P1 = 0 forces lambda = 0")


def achievable_constraints(ch: ChannelParams, s: SchemeParams) -> AchievableRates:
    _check_scheme(ch, s)
    r1, r2, total = (float(x) for x in achievable_caps(ch, s.alpha, s.lam))
    cons = RateConstraintSet(max(r1, 0.0), max(r2, 0.0), total)
    return AchievableRates(s, cons, r1, r2)


def point_d(ch: ChannelParams, s: SchemeParams) -> RatePair:
    """D(lam) = (R1 cap, min(R2 cap, sum cap - R1 cap)), the pentagon's Pareto corner."""
    return achievable_constraints(ch, s).constraints.corner()


def lambda_samples(ch: ChannelParams, alpha: float, n: int, span: float,
                   include_special: bool = True) -> np.ndarray:
    """lam on the segment [0, span * lam_Costa1] (n points), plus the Costa
    coefficients when they fall on that segment."""
    lc1 = lambda_costa_1(ch, alpha)
    t = np.linspace(0.0, span, int(n)) if n > 1 else np.zeros(1)
    lams = list(lc1 * t)
    if include_special and lc1 != 0:
        if span >= 1:
            lams.append(lc1)
        ratio = lambda_costa_2(ch, alpha) / lc1
        if abs(ratio.imag) <= 1e-12 and 0 <= ratio.real <= span:
            lams.append(lambda_costa_2(ch, alpha))
    return np.unique(np.array(lams, dtype=complex))


def lambda_sweep(ch: ChannelParams, alpha: float, lambda_grid: int = DEFAULT_LAMBDA_GRID,
                 lambda_span: float = DEFAULT_LAMBDA_SPAN, lams=None) -> np.ndarray:
    """Rows of (lam, r1_raw, r2_raw, sum_cap) along the lambda segment.

    Returned as a structured array with fields lam (complex), r1, r2, sum.
    """
    if lams is None:
        lams = lambda_samples(ch, alpha, lambda_grid, lambda_span)
    lams = np.asarray(lams, dtype=complex)
    if alpha * ch.P1 == 0:
        lams = np.zeros(1, dtype=complex)
    r1, r2, total = achievable_caps(ch, alpha, lams)
    out = np.zeros(len(lams), dtype=[("lam", complex), ("r1", float), ("r2", float), ("sum", float)])
    out["lam"], out["r1"], out["r2"], out["sum"] = lams, r1, r2, total
    return out


def _lambda_matrix(ch, alphas, lambda_grid, lambda_span, extra=None):
    """(n_alpha, m) matrix of lambda values per alpha: the span grid, the two
    Costa coefficients and any ``extra`` columns (NaN entries are replaced by
    lam_Costa1)."""
    lc1 = lambda_costa_1(ch, alphas)
    lc2 = lambda_costa_2(ch, alphas)
    t = np.linspace(0.0, lambda_span, int(lambda_grid))
    cols = [lc1[:, None] * t[None, :], lc1[:, None], lc2[:, None]]
    if extra is not None:
        extra = np.where(np.isnan(extra), lc1[:, None], extra)
        cols.append(extra)
    lams = np.hstack(cols)
    # no DPC freedom when alpha * P1 = 0
    lams[alphas * ch.P1 == 0] = 0.0
    return lams


def region_for_lambdas(ch: ChannelParams, alphas, lams) -> RateRegion:
    """Convex closure of the pentagons for an (n_alpha, m) lambda matrix."""
    alphas = np.asarray(alphas, dtype=float)
    r1, r2, total = achievable_caps(ch, alphas[:, None], lams)
    return region_from_constraints(r1.ravel(), r2.ravel(), total.ravel())


def _alphas_for(ch: ChannelParams, n: int) -> np.ndarray:
    # P2 = 0: only alpha = 1 is admissible
    return np.ones(1) if ch.P2 == 0 else _alpha_grid(n)


def achievable_region(ch: ChannelParams, alpha_grid: int = 501,
                      lambda_grid: int = DEFAULT_LAMBDA_GRID,
                      lambda_span: float = DEFAULT_LAMBDA_SPAN) -> RateRegion:
    """Closure over an alpha grid and lam in [0, span * lam_Costa1], with the
    Costa coefficients and the sum-rate-optimal roots injected exactly."""
    from .lambda_opt import sum_rate_root_matrix

    if int(lambda_grid) < 2 or lambda_span < 1:
        raise DomainError("lambda_grid must be >= 2 and lambda_span >= 1")
    alphas = _alphas_for(ch, alpha_grid)
    lams = _lambda_matrix(ch, alphas, lambda_grid, lambda_span, sum_rate_root_matrix(ch, alphas))
    return region_for_lambdas(ch, alphas, lams)


def perfect_dpc_region(ch: ChannelParams, alpha_grid: int = 501) -> RateRegion:
    """Region with lam fixed to lam_Costa1 for every alpha."""
    alphas = _alphas_for(ch, alpha_grid)
    return region_for_lambdas(ch, alphas, lambda_costa_1(ch, alphas)[:, None])


def any_dpc_region(ch: ChannelParams, alpha_grid: int = 501,
                   lambda_grid: int = DEFAULT_LAMBDA_GRID,
                   lambda_span: float = DEFAULT_LAMBDA_SPAN) -> RateRegion:
    """Region over the plain lambda segment grid (no injected roots)."""
    alphas = _alphas_for(ch, alpha_grid)
    return region_for_lambdas(ch, alphas, _lambda_matrix(ch, alphas, lambda_grid, lambda_span))
