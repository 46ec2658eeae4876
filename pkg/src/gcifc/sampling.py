"""Seeded random channel draws used by the verification suite and tests."""

from __future__ import annotations

import numpy as np

from .core import ChannelParams


def random_channels(rng: np.random.Generator, n: int, b_range=(1.0, 5.0),
                    power_range=(0.01, 100.0), a_radius: float = 5.0,
                    real_a: bool = False) -> list[ChannelParams]:
    """Powers log-uniform on ``power_range``, ``a`` uniform on a disk (or
    interval when ``real_a``), |b| uniform on the half-open (lo, hi]."""
    lo, hi = np.log10(power_range[0]), np.log10(power_range[1])
    P1 = 10 ** rng.uniform(lo, hi, n)
    P2 = 10 ** rng.uniform(lo, hi, n)
    if real_a:
        a = rng.uniform(-a_radius, a_radius, n).astype(complex)
    else:
        a = a_radius * np.sqrt(rng.uniform(0, 1, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
    b = b_range[1] - (b_range[1] - b_range[0]) * rng.uniform(0, 1, n)
    return [ChannelParams(complex(a[i]), float(b[i]), float(P1[i]), float(P2[i])) for i in range(n)]


def random_matching(rng: np.random.Generator, n: int, predicate, batch: int = 256,
                    max_draws: int = 1_000_000, **kwargs) -> list[ChannelParams]:
    """First ``n`` draws satisfying ``predicate`` (rejection sampling)."""
    out: list[ChannelParams] = []
    drawn = 0
    while len(out) < n:
        if drawn >= max_draws:
            raise RuntimeError(f"only {len(out)} of {n} channels matched after {drawn} draws")
        for ch in random_channels(rng, batch, **kwargs):
            if predicate(ch):
                out.append(ch)
                if len(out) == n:
                    break
        drawn += batch
    return out
