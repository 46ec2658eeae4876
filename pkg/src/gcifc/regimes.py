"""
Capacity-regime predicates for standard-form channels, with brute-force
oracles for the two closed-form conditions.

Closed-form predicates compare computed values exactly (no tolerance band);
oracles allow -1e-9 slack.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .core import ChannelParams, DomainError

ORACLE_SLACK = 1e-9
FLAG_NAMES = ("weak", "very_strong", "pdc", "degraded", "gap_a")


@dataclass(frozen=True)
class RegimeLabel:
    weak: bool
    very_strong: bool
    primary_decodes_cognitive: bool
    degraded: bool
    gap_condition_a: bool

    def flags(self) -> list[str]:
        short = dict(zip((f.name for f in fields(self)), FLAG_NAMES))
        return [short[f.name] for f in fields(self) if getattr(self, f.name)]


def very_strong_lhs_array(a, b, P1, P2):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=float)
    return ((np.abs(a) ** 2 - 1) * P2 - (b ** 2 - 1) * P1
            - 2 * np.abs(a - b) * np.sqrt(P1 * P2))


def q_alpha_array(a, b, P1, P2, alpha):
    """Q(alpha) = P2 |1 - a|b||^2 (alpha P1 + 1)
                  - (|b|^2 - 1)(P1 + |a|^2 P2 + 2 Re{a} sqrt((1-alpha) P1 P2) + 1)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=float)
    alpha = np.asarray(alpha, dtype=float)
    h1 = P1 + np.abs(a) ** 2 * P2 + 2 * a.real * np.sqrt((1 - alpha) * P1 * P2) + 1
    return P2 * np.abs(1 - a * b) ** 2 * (alpha * P1 + 1) - (b ** 2 - 1) * h1


def is_weak(ch: ChannelParams) -> bool:
    return ch.b_mag <= 1


def very_strong_lhs(ch: ChannelParams) -> float:
    return float(very_strong_lhs_array(ch.a, ch.b_mag, ch.P1, ch.P2))


def is_very_strong(ch: ChannelParams) -> bool:
    return ch.b_mag > 1 and very_strong_lhs(ch) >= 0


def very_strong_oracle(ch: ChannelParams, rho_grid: int = 101) -> bool:
    """Check E|Y1|^2 - E|Y2|^2 >= 0 over a polar grid of input correlations rho."""
    if ch.b_mag <= 1:
        raise DomainError("the very-strong oracle needs |b| > 1")
    n = int(rho_grid)
    r = np.linspace(0.0, 1.0, n)
    phi = 2 * np.pi * np.arange(n) / n
    rho = (r[:, None] * np.exp(1j * phi[None, :])).ravel()
    diff = ((abs(ch.a) ** 2 - 1) * ch.P2 - (ch.b_mag ** 2 - 1) * ch.P1
            + 2 * np.sqrt(ch.P1 * ch.P2) * ((np.conj(ch.a) * rho).real - ch.b_mag * rho.real))
    return bool(diff.min() >= -ORACLE_SLACK)


def q_alpha(ch: ChannelParams, alpha: float) -> float:
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return float(q_alpha_array(ch.a, ch.b_mag, ch.P1, ch.P2, alpha))


def is_primary_decodes_cognitive(ch: ChannelParams) -> bool:
    return ch.b_mag > 1 and q_alpha(ch, 0.0) >= 0 and q_alpha(ch, 1.0) >= 0


def pdc_oracle(ch: ChannelParams, alpha_grid: int = 1001) -> bool:
    """min of Q over a uniform alpha grid, with slack. Does not test |b| > 1."""
    alphas = np.linspace(0.0, 1.0, int(alpha_grid))
    return bool(q_alpha_array(ch.a, ch.b_mag, ch.P1, ch.P2, alphas).min() >= -ORACLE_SLACK)


def is_degraded(ch: ChannelParams) -> bool:
    if ch.b_mag == 0:
        return False
    return abs(ch.a.imag) <= 1e-12 and abs(ch.a.real - 1 / ch.b_mag) <= 1e-12


def classify(ch: ChannelParams) -> RegimeLabel:
    from .gap import satisfies_gap_condition

    return RegimeLabel(
        weak=is_weak(ch),
        very_strong=is_very_strong(ch),
        primary_decodes_cognitive=is_primary_decodes_cognitive(ch),
        degraded=is_degraded(ch),
        gap_condition_a=satisfies_gap_condition(ch),
    )


@dataclass(frozen=True, eq=False)
class RegimeGrid:
    """Flags on an (|b|, a) grid; arrays have shape (len(b_mag), len(a))."""

    a: np.ndarray
    b_mag: np.ndarray
    flags: dict

    def rows(self):
        """Row-major (|b| outer, a inner) tuples (a, b_mag, *flags as 0/1)."""
        for i, b in enumerate(self.b_mag):
            for j, a in enumerate(self.a):
                yield (float(a), float(b)) + tuple(int(self.flags[k][i, j]) for k in FLAG_NAMES)


def _axis(rng, n):
    lo, hi = rng
    return np.linspace(float(lo), float(hi), int(n))


def regime_map(P1: float, P2: float, a_range=(-5.0, 5.0), b_range=(0.0, 5.0),
               resolution: int = 401) -> RegimeGrid:
    """Classify every cell of a real-a grid; both range ends are included."""
    if int(resolution) < 2:
        raise DomainError("resolution must be >= 2")
    ChannelParams(0.0, 0.0, P1, P2)
    a = _axis(a_range, resolution)
    b = _axis(b_range, resolution)
    if b.min() < 0:
        raise DomainError("|b| range must be nonnegative")
    A, B = np.meshgrid(a, b)
    strong = B > 1
    q0 = q_alpha_array(A, B, P1, P2, 0.0)
    q1 = q_alpha_array(A, B, P1, P2, 1.0)
    with np.errstate(divide="ignore"):
        inv = np.where(B > 0, 1.0 / np.where(B > 0, B, 1.0), np.nan)
    flags = {
        "weak": B <= 1,
        "very_strong": strong & (very_strong_lhs_array(A, B, P1, P2) >= 0),
        "pdc": strong & (q0 >= 0) & (q1 >= 0),
        "degraded": (B > 0) & (np.abs(A - inv) <= 1e-12),
        "gap_a": q1 >= 0,
    }
    return RegimeGrid(a, b, flags)
