import math

import numpy as np
import pytest

from gcifc import (
    ChannelParams,
    DomainError,
    capacity_impossibility_check,
    perturbation_rates,
    received_powers,
    sum_rate_optimal_lambda,
)
from gcifc.achievable import achievable_caps, lambda_costa_1, lambda_costa_2
from gcifc.lambda_opt import (
    sum_rate_coefficients,
    sum_rate_optimal_region,
    sum_rate_root_matrix,
)
from gcifc.regimes import is_primary_decodes_cognitive, is_very_strong
from gcifc.sampling import random_matching


def sum_residual(ch, alpha, lam):
    r1, r2, s = achievable_caps(ch, alpha, lam)
    return float(r1 + r2 - s)


def bisection_roots(ch, alpha, lo=-60.0, hi=60.0, n=24001):
    """Real zeros of R1 + R2 - sum located by sign changes and bisection."""
    x = np.linspace(lo, hi, n)
    g = np.array([sum_residual(ch, alpha, v) for v in x])
    roots = []
    for k in np.nonzero(np.sign(g[:-1]) * np.sign(g[1:]) < 0)[0]:
        a, b = x[k], x[k + 1]
        for _ in range(80):
            m = 0.5 * (a + b)
            if np.sign(sum_residual(ch, alpha, m)) == np.sign(sum_residual(ch, alpha, a)):
                a = m
            else:
                b = m
        roots.append(0.5 * (a + b))
    return roots


def quadratic_from_rates(ch, alpha):
    """f1 = f2 as a quadratic in real lambda, fitted from three samples.

    2^-f is affine in |lam - lam*|^2, so 2^-f2 - 2^-f1 is an exact quadratic
    with the same zero set as f1 - f2."""
    xs = np.array([-1.0, 0.0, 1.0])
    ys = []
    for x in xs:
        r1, r2, s = achievable_caps(ch, alpha, x)
        ys.append(2.0 ** (-float(s - r2)) - 2.0 ** (-float(r1)))
    return np.polyfit(xs, ys, 2)


def test_received_powers_match_covariance(fig3_channel):
    ch, al = fig3_channel, 0.5
    s = math.sqrt((1 - al) * ch.P1 / ch.P2)
    pw = received_powers(ch, al)
    assert pw.H1 == pytest.approx(al * ch.P1 + abs(ch.a + s) ** 2 * ch.P2 + 1, abs=1e-12)
    assert pw.H2 == pytest.approx(ch.b_mag ** 2 * al * ch.P1 + abs(1 + ch.b_mag * s) ** 2 * ch.P2 + 1,
                                  abs=1e-12)


def test_perturbation_matches_direct(fig3_channel):
    for eps in (0.0, 0.01, -0.2, 0.05 + 0.03j, 1.3):
        pr = perturbation_rates(fig3_channel, 0.5, eps)
        r1, r2, _ = achievable_caps(fig3_channel, 0.5, lambda_costa_1(fig3_channel, 0.5) + eps)
        assert pr.r1 == pytest.approx(float(r1), abs=1e-12)
        assert pr.r2 == pytest.approx(float(r2), abs=1e-12)
    assert pr.delta_lambda == pytest.approx(lambda_costa_1(fig3_channel, 0.5) - lambda_costa_2(fig3_channel, 0.5))


def test_perturbation_orders(fig3_channel):
    pr0 = perturbation_rates(fig3_channel, 0.5, 0)
    d = pr0.delta_lambda / abs(pr0.delta_lambda)
    drops, gains = [], []
    for e in (1e-2, 1e-3, 1e-4):
        p = perturbation_rates(fig3_channel, 0.5, e * d)
        drops.append(pr0.r1 - p.r1)
        gains.append(p.r2 - pr0.r2)
    # quadratic loss on R1, linear gain on R2
    assert drops[0] / drops[1] == pytest.approx(100, rel=1e-2)
    assert gains[0] / gains[1] == pytest.approx(10, rel=5e-2)


def test_coefficients_match_fitted_quadratic():
    rng = np.random.default_rng(11)
    chans = random_matching(rng, 40, lambda c: not is_very_strong(c), real_a=True)
    for ch in chans:
        for al in (0.2, 0.7, 1.0):
            c = np.array(sum_rate_coefficients(ch, al))
            fit = quadratic_from_rates(ch, al)
            # same zero set: proportional coefficient vectors
            k = np.dot(fit, c) / np.dot(c, c)
            np.testing.assert_allclose(fit, k * c, rtol=1e-6, atol=1e-9 * np.abs(fit).max())


def test_roots_match_bisection(fig8_channel):
    for al in (0.1, 0.5, 1.0):
        roots = [r.real for r in sum_rate_optimal_lambda(fig8_channel, al)]
        found = bisection_roots(fig8_channel, al)
        assert len(found) == len(roots)
        np.testing.assert_allclose(sorted(found), roots, atol=1e-9)


def test_root_residuals_random():
    rng = np.random.default_rng(21)
    chans = random_matching(rng, 100, lambda c: not is_very_strong(c))
    for ch in chans:
        for al in np.arange(1, 11) / 10:
            roots = sum_rate_optimal_lambda(ch, al)
            assert roots
            for lam in roots:
                assert abs(sum_residual(ch, al, lam)) <= 1e-9


def test_sign_pattern_counterexample():
    # a = 0, |b| = 2, P = 10, alpha = 1: the R2-weighted term makes c2 positive and c0 negative
    c2, c1, c0 = sum_rate_coefficients(ChannelParams(0.0, 2.0, 10.0, 10.0), 1.0)
    assert c2 > 0 and c0 < 0


def test_degraded_double_root():
    # receiver 2 sees a degraded copy: f1 <= f2 everywhere, touching at one lambda
    ch = ChannelParams(0.5, 2.0, 3.0, 3.0)
    grid = np.linspace(-5, 5, 2001)
    for al in (0.1, 0.3, 0.6, 1.0):
        roots = sum_rate_optimal_lambda(ch, al)
        # a double root, split at most by sqrt(rounding)
        assert 1 <= len(roots) <= 2
        assert abs(roots[-1] - roots[0]) <= 1e-6
        assert abs(sum_residual(ch, al, roots[0])) <= 1e-9
        assert max(sum_residual(ch, al, x) for x in grid) <= 1e-12
        assert np.isfinite(sum_rate_root_matrix(ch, [al])).all()


def test_domain_errors():
    with pytest.raises(DomainError):
        sum_rate_optimal_lambda(ChannelParams(0.5, 0.9, 1, 1), 0.5)
    with pytest.raises(DomainError):
        sum_rate_optimal_lambda(ChannelParams(3.0, math.sqrt(2), 1, 1), 0.5)
    with pytest.raises(DomainError):
        sum_rate_optimal_lambda(ChannelParams(0.0, 2.0, 1, 1), 0.0)
    with pytest.raises(DomainError):
        capacity_impossibility_check(ChannelParams(-1.0, 2.0, 10, 10))
    with pytest.raises(DomainError):
        capacity_impossibility_check(ChannelParams(0.0, 0.5, 10, 10))


def test_impossibility_small_sweep():
    rng = np.random.default_rng(8)
    chans = random_matching(rng, 10, lambda c: not is_primary_decodes_cognitive(c))
    assert all(capacity_impossibility_check(ch, 101, 101) for ch in chans)


def test_sum_rate_region_dominates_perfect(fig8_channel):
    from gcifc.achievable import perfect_dpc_region
    from gcifc.core import support_gap
    opt = sum_rate_optimal_region(fig8_channel, 501)
    perfect = perfect_dpc_region(fig8_channel, 501)
    # strictly larger somewhere, by a few thousandths of a bit after convexification
    assert 1e-3 < support_gap(opt, perfect) < 1e-2
    # the sum-rate-optimal choice attains the largest sum rate
    assert opt.support([1, 1]) >= perfect.support([1, 1]) - 1e-12
