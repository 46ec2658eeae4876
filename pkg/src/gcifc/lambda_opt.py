"""
Partial interference pre-cancellation: rates around lam_Costa1, the
sum-rate-optimal DPC coefficient and a grid witness that the outer bound is
out of reach of the scheme outside the primary-decodes-cognitive regime.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .achievable import (
    DEFAULT_LAMBDA_GRID,
    _alphas_for,
    _lambda_matrix,
    achievable_caps,
    lambda_costa_1,
    lambda_costa_2,
    region_for_lambdas,
)
from .core import ChannelParams, DomainError, _LN2
from .outer import outer_caps
from .regimes import is_primary_decodes_cognitive, is_very_strong

IMPOSSIBILITY_TOL = 1e-6


@dataclass(frozen=True)
class ReceivedPowers:
    H1: float
    H2: float


@dataclass(frozen=True)
class PerturbationRates:
    epsilon: complex
    delta_lambda: complex
    r1: float
    r2: float


def received_powers_array(ch: ChannelParams, alpha):
    alpha = np.asarray(alpha, dtype=float)
    cross = np.sqrt((1 - alpha) * ch.P1 * ch.P2)
    H1 = 1 + abs(ch.a) ** 2 * ch.P2 + ch.P1 + 2 * ch.a.real * cross
    H2 = 1 + ch.P2 + ch.b_mag ** 2 * ch.P1 + 2 * ch.b_mag * cross
    return H1, H2


def received_powers(ch: ChannelParams, alpha: float) -> ReceivedPowers:
    """Second moments E|Y1|^2, E|Y2|^2 under the Gaussian input assignment."""
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    H1, H2 = received_powers_array(ch, alpha)
    return ReceivedPowers(float(H1), float(H2))


def perturbation_rates(ch: ChannelParams, alpha: float, epsilon: complex) -> PerturbationRates:
    """R1/R2 caps at lam = lam_Costa1 + epsilon, written in terms of epsilon."""
    ap = alpha * ch.P1
    if ap <= 0:
        raise DomainError("perturbation rates need alpha * P1 > 0")
    eps = complex(epsilon)
    pw = received_powers(ch, alpha)
    delta = complex(lambda_costa_1(ch, alpha) - lambda_costa_2(ch, alpha))
    bp = ch.b_mag ** 2 * ap
    r1 = np.log1p(ap) - np.log1p((ap + 1) ** 2 * ch.P2 / (ap * pw.H1) * abs(eps) ** 2)
    r2 = np.log(pw.H2) + np.log(1 / (1 + bp) + (bp + 1) * ch.P2 / (ap * pw.H2) * abs(eps + delta) ** 2)
    return PerturbationRates(eps, delta, float(r1 / _LN2), float(r2 / _LN2))


def sum_rate_coefficients_array(ch: ChannelParams, alpha):
    """Coefficients (of |lam|^2, Re{lam}, 1) of the sum-rate-optimality quadratic."""
    alpha = np.asarray(alpha, dtype=float)
    H1, H2 = received_powers_array(ch, alpha)
    b, P1, P2 = ch.b_mag, ch.P1, ch.P2
    ap = alpha * P1
    d = b * b / H2 - 1 / H1
    c2 = -P2 * (d + (1 / H2 - 1 / H1) / ap)
    c1 = 2 * (np.sqrt((1 - alpha) * P1 * P2) * d + P2 * (b / H2 - ch.a.real / H1))
    c0 = ap * d
    return c2, c1, c0


def sum_rate_coefficients(ch: ChannelParams, alpha: float) -> tuple[float, float, float]:
    _check_sum_rate_domain(ch, alpha)
    return tuple(float(c) for c in sum_rate_coefficients_array(ch, alpha))


def _check_sum_rate_domain(ch: ChannelParams, alpha: float):
    if ch.b_mag <= 1:
        raise DomainError("sum-rate-optimal lambda is defined for |b| > 1")
    if is_very_strong(ch):
        raise DomainError("very strong interference: the sum cap is already met at lam_Costa1")
    if not 0 < alpha <= 1 or ch.P1 <= 0:
        raise DomainError("need 0 < alpha <= 1 and P1 > 0")


def _real_roots(c2, c1, c0):
    """Real roots of c2 x^2 + c1 x + c0, cancellation-free; NaN where absent.
    Returns an (..., 2) array."""
    c2, c1, c0 = np.broadcast_arrays(*(np.asarray(c, dtype=float) for c in (c2, c1, c0)))
    disc = c1 * c1 - 4 * c2 * c0
    # tangency (e.g. degraded channels) gives disc = 0 up to rounding
    scale = c1 * c1 + np.abs(4 * c2 * c0)
    disc = np.where((disc < 0) & (disc >= -1e-12 * scale), 0.0, disc)
    sq = np.sqrt(np.where(disc >= 0, disc, np.nan))
    q = -0.5 * (c1 + np.where(c1 >= 0, sq, -sq))
    with np.errstate(divide="ignore", invalid="ignore"):
        x1 = np.where(c2 != 0, q / c2, np.where(c1 != 0, -c0 / c1, np.nan))
        x2 = np.where((c2 != 0) & (q != 0), c0 / q, np.nan)
    return np.stack([x1, x2], axis=-1)


def sum_rate_optimal_lambda(ch: ChannelParams, alpha: float) -> list[complex]:
    """Real solutions (Im lam = 0) of the sum-rate-optimality quadratic, ascending.

    A double root is returned twice collapsed to one value; on a degraded
    channel the two sides of f1 = f2 only touch, so the discriminant is zero.
    An empty list means no real solution.
    """
    _check_sum_rate_domain(ch, alpha)
    roots = _real_roots(*sum_rate_coefficients_array(ch, alpha))
    vals = sorted({float(x) for x in roots if np.isfinite(x)})
    return [complex(x) for x in vals]


def sum_rate_root_matrix(ch: ChannelParams, alphas) -> np.ndarray:
    """(n_alpha, 2) complex roots per alpha, NaN where undefined or absent."""
    alphas = np.asarray(alphas, dtype=float)
    out = np.full((len(alphas), 2), np.nan, dtype=complex)
    if ch.b_mag <= 1 or ch.P1 <= 0 or is_very_strong(ch):
        return out
    ok = alphas > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        coeffs = sum_rate_coefficients_array(ch, alphas[ok])
    out[ok] = _real_roots(*coeffs)
    return out


def _impossibility_alphas(ch: ChannelParams, n: int) -> np.ndarray:
    """Uniform grid plus the alpha where the lam_Costa1 corner falls furthest
    below the outer corner (10^4-point scan). A short bad interval near
    alpha = 0 can otherwise fall between grid points."""
    grid = np.linspace(0.0, 1.0, int(n))
    dense = np.linspace(0.0, 1.0, 10_001)[1:]
    r1, r2, s = achievable_caps(ch, dense, lambda_costa_1(ch, dense))
    o1, o2, os_ = outer_caps(ch, dense)
    t1 = np.minimum(o1, os_)
    deficit = np.minimum(o2, os_ - t1) - np.minimum(r2, s - r1)
    return np.union1d(grid, [dense[np.argmax(deficit)]])


def capacity_impossibility_check(ch: ChannelParams, alpha_grid: int = 201,
                                 lambda_grid: int = DEFAULT_LAMBDA_GRID) -> bool:
    """True when some outer-bound corner (alpha_out grid) is reached by no
    scheme point (alpha_in, lam) of the grid, to within 1e-6 bits.

    Both alpha grids are the same uniform grid, refined by the minimiser of Q.
    """
    if ch.b_mag <= 1:
        raise DomainError("the check is stated for |b| > 1")
    if is_primary_decodes_cognitive(ch):
        raise DomainError("vacuous in the primary-decodes-cognitive regime")
    if ch.P2 == 0:
        alphas = np.ones(1)
    else:
        alphas = _impossibility_alphas(ch, alpha_grid)
    lams = _lambda_matrix(ch, alphas, lambda_grid, 2.0, sum_rate_root_matrix(ch, alphas))
    r1, r2, s = achievable_caps(ch, alphas[:, None], lams)
    r1 = np.maximum(r1.ravel(), 0.0)
    r2 = np.maximum(r2.ravel(), 0.0)
    s = s.ravel()
    o1, o2, os_ = outer_caps(ch, alphas)
    t1 = np.minimum(o1, os_)
    t2 = np.minimum(o2, os_ - t1)
    tol = IMPOSSIBILITY_TOL
    for x, y in zip(t1, t2):
        reached = (x <= r1 + tol) & (y <= r2 + tol) & (x + y <= s + tol)
        if not reached.any():
            return True
    return False


def sum_rate_optimal_region(ch: ChannelParams, alpha_grid: int = 501):
    """Closure over alpha of the pentagons at the sum-rate-optimal roots
    (lam = 0 at alpha = 0, where no DPC freedom is left). Alphas without a
    real root contribute nothing."""
    _check_sum_rate_domain(ch, 1.0)
    alphas = _alphas_for(ch, alpha_grid)
    roots = sum_rate_root_matrix(ch, alphas)
    roots[alphas == 0] = 0.0
    keep = np.isfinite(roots.real)
    # rows with a single root repeat it so the matrix stays rectangular
    filled = np.where(keep, roots, roots[:, ::-1])
    rows = keep.any(axis=1)
    return region_for_lambdas(ch, alphas[rows], filled[rows])
