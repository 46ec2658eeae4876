import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcifc import ChannelParams, DomainError, cap_c, outer_constraints, outer_envelope_strong, outer_region
from gcifc.outer import alpha_grid, miso_power, outer_caps, outer_corner


def outer_oracle(a, b, P1, P2, alpha):
    """Scalar re-evaluation of the three outer-bound caps with math.log2."""
    ab = 1 - alpha
    r1 = math.log2(1 + alpha * P1)
    r2 = math.log2(1 + b * b * P1 + P2 + 2 * math.sqrt(ab * b * b * P1 * P2))
    corr = math.log2((1 + max(1.0, b * b) * alpha * P1) / (1 + alpha * b * b * P1))
    return r1, r2, r2 + corr


channels = st.builds(
    ChannelParams,
    st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
    st.floats(0, 5), st.floats(0, 100), st.floats(0, 100),
)


def test_pdc_channel_alpha_one(pdc_channel):
    c = outer_constraints(pdc_channel, 1.0)
    assert c.r1_max == pytest.approx(3.4594316186372978, abs=1e-12)
    assert c.r2_max == pytest.approx(cap_c(50), abs=1e-12)
    # |b| > 1: the sum correction term vanishes
    assert c.sum_max == pytest.approx(cap_c(50), abs=1e-12)


def test_alpha_zero_is_miso(pdc_channel):
    c = outer_constraints(pdc_channel, 0.0)
    assert c.r1_max == 0
    assert c.r2_max == pytest.approx(cap_c((2 * math.sqrt(10) + math.sqrt(10)) ** 2), abs=1e-12)
    assert miso_power(pdc_channel) == pytest.approx(90.0)


def test_silent_cognitive():
    c = outer_constraints(ChannelParams(0.7, 1.3, 0.0, 5.0), 1.0)
    assert c.r1_max == 0 and c.r2_max == cap_c(5.0)
    reg = outer_region(ChannelParams(0.7, 1.3, 0.0, 5.0), 11)
    np.testing.assert_allclose(reg.vertices, [[0, 0], [0, cap_c(5.0)]], atol=1e-15)


@settings(max_examples=200, deadline=None)
@given(channels, st.floats(0, 1))
def test_outer_matches_oracle(ch, alpha):
    c = outer_constraints(ch, alpha)
    want = outer_oracle(ch.a, ch.b_mag, ch.P1, ch.P2, alpha)
    np.testing.assert_allclose((c.r1_max, c.r2_max, c.sum_max), want, rtol=1e-12, atol=1e-12)


@settings(max_examples=200, deadline=None)
@given(channels)
def test_outer_monotone_in_alpha(ch):
    r1, r2, s = outer_caps(ch, np.linspace(0, 1, 201))
    assert np.all(np.diff(r1) >= -1e-12)
    assert np.all(np.diff(r2) <= 1e-12)
    if ch.b_mag > 1:
        np.testing.assert_allclose(s - r2, 0, atol=1e-12)
    else:
        assert np.all(s >= r2 - 1e-12)


@pytest.mark.parametrize("alpha", [-0.1, 1.1])
def test_alpha_domain(pdc_channel, alpha):
    with pytest.raises(DomainError):
        outer_constraints(pdc_channel, alpha)


def test_region_max_r1(pdc_channel):
    reg = outer_region(pdc_channel, 501)
    assert reg.max_r1() == pytest.approx(cap_c(10), abs=1e-12)
    assert reg.max_r2() == pytest.approx(cap_c(90), abs=1e-12)
    assert reg.is_convex()


def test_region_refinement_is_monotone(pdc_channel):
    th = np.linspace(0, np.pi / 2, 91)
    dirs = np.column_stack([np.cos(th), np.sin(th)])
    coarse = outer_region(pdc_channel, 251).support(dirs)
    fine = outer_region(pdc_channel, 501).support(dirs)
    assert np.all(fine >= coarse - 1e-6)


def test_outer_corner(pdc_channel):
    c = outer_corner(pdc_channel, 0.5)
    r1, r2, s = outer_oracle(-1, 2, 10, 10, 0.5)
    assert c.r1 == pytest.approx(r1) and c.r2 == pytest.approx(min(r2, s - r1))


def test_envelope_strong():
    env = outer_envelope_strong(ChannelParams(2.0, 3.0, 6.0, 6.0))
    assert env.sum_max == pytest.approx(cap_c(96), abs=1e-12)
    assert env.r1_max == pytest.approx(cap_c(6))
    zero = outer_envelope_strong(ChannelParams(0.0, 2.0, 0.0, 4.0))
    assert zero.r1_max == 0 and zero.sum_max == pytest.approx(cap_c(4))
    with pytest.raises(DomainError):
        outer_envelope_strong(ChannelParams(0.0, 1.0, 1.0, 1.0))


def test_envelope_contains_region(pdc_channel):
    env = outer_envelope_strong(pdc_channel)
    for p in outer_region(pdc_channel, 501).points():
        assert env.contains(p, tol=1e-9)


def test_alpha_grid():
    assert alpha_grid(2).tolist() == [0.0, 1.0]
    with pytest.raises(DomainError):
        alpha_grid(1)
