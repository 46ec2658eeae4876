"""
Channel/scheme parameter types, the rate primitive C(x) and polygon helpers.

Rates are in bits per channel use. Regions are convex polygons in the
(R1, R2) plane stored counterclockwise, starting at the origin; the second
vertex is the largest-R1 point on the R1 axis and the last vertex lies on the
R2 axis.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

# Hull/collinearity tolerance vs. rate comparison tolerance.
GEOM_TOL = 1e-12
RATE_TOL = 1e-9

_LN2 = math.log(2.0)


class DomainError(ValueError):
    """Raised when an input lies outside an operation's domain."""


def _finite(x) -> bool:
    return bool(np.all(np.isfinite(x)))


@dataclass(frozen=True)
class ChannelParams:
    """Standard-form G-CIFC: Y1 = X1 + a X2 + Z1, Y2 = |b| X1 + X2 + Z2."""

    a: complex
    b_mag: float
    P1: float
    P2: float

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        for name in ("b_mag", "P1", "P2"):
            val = float(getattr(self, name))
            if not math.isfinite(val) or val < 0:
                raise DomainError(f"{name} must be finite and nonnegative, got {val}")
            object.__setattr__(self, name, val)
        if not (math.isfinite(self.a.real) and math.isfinite(self.a.imag)):
            raise DomainError(f"a must be finite, got {self.a}")

    def to_dict(self) -> dict:
        return {
            "a_re": self.a.real,
            "a_im": self.a.imag,
            "b_mag": self.b_mag,
            "P1": self.P1,
            "P2": self.P2,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ChannelParams":
        return cls(complex(d.get("a_re", 0.0), d.get("a_im", 0.0)),
                   d["b_mag"], d["P1"], d["P2"])


@dataclass(frozen=True)
class SchemeParams:
    """Power split ``alpha`` and DPC coefficient ``lam`` (lambda)."""

    alpha: float
    lam: complex = 0j

    def __post_init__(self):
        alpha = float(self.alpha)
        if not (0.0 <= alpha <= 1.0):
            raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
        lam = complex(self.lam)
        if not (math.isfinite(lam.real) and math.isfinite(lam.imag)):
            raise DomainError(f"lambda must be finite, got {lam}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "lam", lam)

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "lambda_re": self.lam.real,
                "lambda_im": self.lam.imag}

    @classmethod
    def from_dict(cls, d: dict) -> "SchemeParams":
        return cls(d["alpha"], complex(d.get("lambda_re", 0.0), d.get("lambda_im", 0.0)))


def params_to_json(ch: ChannelParams, s: SchemeParams | None = None) -> str:
    """Flat JSON object with keys a_re, a_im, b_mag, P1, P2[, alpha, lambda_re, lambda_im]."""
    d = ch.to_dict()
    if s is not None:
        d.update(s.to_dict())
    return json.dumps(d, sort_keys=True)


def params_from_json(text: str) -> tuple[ChannelParams, SchemeParams | None]:
    d = json.loads(text)
    ch = ChannelParams.from_dict(d)
    s = SchemeParams.from_dict(d) if "alpha" in d else None
    return ch, s


class RatePair(NamedTuple):
    r1: float
    r2: float


@dataclass(frozen=True)
class RateConstraintSet:
    """Caps on R1, R2 and R1 + R2 (bits/channel use)."""

    r1_max: float
    r2_max: float
    sum_max: float

    def __post_init__(self):
        for name in ("r1_max", "r2_max", "sum_max"):
            val = float(getattr(self, name))
            if not math.isfinite(val) or val < 0:
                raise DomainError(f"{name} must be finite and nonnegative, got {val}")
            object.__setattr__(self, name, val)

    def corner(self) -> RatePair:
        """Pareto corner with the largest R1."""
        r1 = min(self.r1_max, self.sum_max)
        return RatePair(r1, min(self.r2_max, self.sum_max - r1))

    def contains(self, p: RatePair, tol: float = RATE_TOL) -> bool:
        return (p.r1 <= self.r1_max + tol and p.r2 <= self.r2_max + tol
                and p.r1 + p.r2 <= self.sum_max + tol)


@dataclass(frozen=True, eq=False)
class RateRegion:
    """Convex polygon, counterclockwise from the origin."""

    vertices: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float).reshape(-1, 2)
        if len(v) == 0 or not _finite(v):
            raise DomainError("a region needs at least one finite vertex")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, RateRegion):
            return NotImplemented
        return self.vertices.shape == other.vertices.shape and bool(
            np.all(self.vertices == other.vertices))

    def __repr__(self):
        return f"RateRegion({self.to_list()})"

    def points(self) -> list[RatePair]:
        return [RatePair(float(x), float(y)) for x, y in self.vertices]

    def to_list(self) -> list[list[float]]:
        return self.vertices.tolist()

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    @classmethod
    def from_json(cls, text: str) -> "RateRegion":
        return cls(np.array(json.loads(text), dtype=float))

    def area(self) -> float:
        x, y = self.vertices[:, 0], self.vertices[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))

    def support(self, w) -> np.ndarray | float:
        """Support function max_v <v, w>; ``w`` is one direction or an (m, 2) array."""
        w = np.asarray(w, dtype=float)
        vals = (self.vertices @ w.T).max(axis=0)
        return float(vals) if w.ndim == 1 else vals

    def is_convex(self, tol: float = GEOM_TOL) -> bool:
        v = self.vertices
        if len(v) < 3:
            return True
        e = np.roll(v, -1, axis=0) - v
        cross = e[:, 0] * np.roll(e, -1, axis=0)[:, 1] - e[:, 1] * np.roll(e, -1, axis=0)[:, 0]
        return bool(np.all(cross >= -tol))

    def edge_normals(self) -> np.ndarray:
        """Unit outward normals of the nonzero edges (closed polygon)."""
        e = np.roll(self.vertices, -1, axis=0) - self.vertices
        n = np.column_stack([e[:, 1], -e[:, 0]])
        norm = np.hypot(n[:, 0], n[:, 1])
        return n[norm > 0] / norm[norm > 0, None]

    def max_r1(self) -> float:
        return float(self.vertices[:, 0].max())

    def max_r2(self) -> float:
        return float(self.vertices[:, 1].max())


def cap_c(x):
    """C(x) = log2(1 + x). Accepts scalars or arrays."""
    arr = np.asarray(x, dtype=float)
    if not _finite(arr) or np.any(arr < 0):
        raise DomainError(f"cap_c needs finite x >= 0, got {x}")
    out = np.log1p(arr) / _LN2
    return float(out) if out.ndim == 0 else out


def _pentagon_corners(r1, r2, s):
    """Vectorised pentagon corners: returns (n, 4, 2) array of
    (r1e, 0), (r1e, min(r2e, s - r1e)), (min(r1e, s - r2e), r2e), (0, r2e)."""
    r1 = np.atleast_1d(np.asarray(r1, dtype=float))
    r2 = np.atleast_1d(np.asarray(r2, dtype=float))
    s = np.atleast_1d(np.asarray(s, dtype=float))
    r1e = np.minimum(r1, s)
    r2e = np.minimum(r2, s)
    zero = np.zeros_like(r1e)
    pts = np.stack([
        np.column_stack([r1e, zero]),
        np.column_stack([r1e, np.minimum(r2e, s - r1e)]),
        np.column_stack([np.clip(s - r2e, 0.0, r1e), r2e]),
        np.column_stack([zero, r2e]),
    ], axis=1)
    return pts


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_vertices(points, tol: float = GEOM_TOL, down_closed: bool = False) -> np.ndarray:
    """Convex hull (monotone chain) of ``points`` plus the origin.

    Output is counterclockwise from the origin with collinear points dropped.
    With ``down_closed=True`` the points are assumed to come from
    down-closed sets in the first quadrant, so dominated points are discarded
    before the hull pass.
    """
    p = np.asarray(points, dtype=float).reshape(-1, 2)
    p = np.vstack([np.zeros((1, 2)), p])
    if down_closed:
        p = np.maximum(p, 0.0)
        r1max = p[:, 0].max()
        r2max = p[:, 1].max()
        order = np.lexsort((-p[:, 1], -p[:, 0]))
        q = p[order]
        best = np.maximum.accumulate(q[:, 1])
        keep = np.ones(len(q), dtype=bool)
        keep[1:] = q[1:, 1] > best[:-1]
        p = np.vstack([[0.0, 0.0], [r1max, 0.0], [0.0, r2max], q[keep]])
    p = np.unique(p, axis=0)  # lexicographic sort by (r1, r2)
    if len(p) <= 2:
        return p
    pts = [tuple(row) for row in p]
    lower: list[tuple] = []
    for pt in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], pt) <= tol:
            lower.pop()
        lower.append(pt)
    upper: list[tuple] = []
    for pt in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], pt) <= tol:
            upper.pop()
        upper.append(pt)
    hull = np.array(lower[:-1] + upper[:-1])
    # rotate so the origin (lexicographically smallest point) comes first
    start = int(np.lexsort((hull[:, 1], hull[:, 0]))[0])
    return np.roll(hull, -start, axis=0)


def pentagon_to_polygon(c: RateConstraintSet) -> RateRegion:
    corners = _pentagon_corners(c.r1_max, c.r2_max, c.sum_max)[0]
    v = [(0.0, 0.0)]
    for pt in map(tuple, corners):
        if pt != v[-1]:
            v.append(pt)
    if len(v) > 1 and v[-1] == v[0]:
        v.pop()
    return RateRegion(np.array(v))


def convex_closure(polygons: Sequence[RateRegion]) -> RateRegion:
    if len(polygons) == 0:
        raise DomainError("convex_closure needs at least one region")
    pts = np.vstack([r.vertices for r in polygons])
    return RateRegion(hull_vertices(pts))


def region_from_constraints(r1, r2, s) -> RateRegion:
    """Convex closure of many pentagons given as arrays of caps.

    Negative caps are clamped to zero.
    """
    r1 = np.maximum(np.asarray(r1, dtype=float), 0.0)
    r2 = np.maximum(np.asarray(r2, dtype=float), 0.0)
    s = np.maximum(np.asarray(s, dtype=float), 0.0)
    return RateRegion(hull_vertices(_pentagon_corners(r1, r2, s), down_closed=True))


def support_gap(inner: RateRegion, outer: RateRegion, directions=None) -> float:
    """max_w h_inner(w) - h_outer(w).

    Default directions are the outer edge normals plus the coordinate axes
    and a fan over the first quadrant, which makes the result <= tol exactly
    when ``inner`` lies inside ``outer`` up to tol.
    """
    if directions is None:
        fan = np.linspace(0.0, np.pi / 2, 33)
        directions = np.vstack([
            outer.edge_normals(),
            inner.edge_normals(),
            [[1, 0], [0, 1], [-1, 0], [0, -1]],
            np.column_stack([np.cos(fan), np.sin(fan)]),
        ])
    w = np.asarray(directions, dtype=float).reshape(-1, 2)
    return float(np.max(inner.support(w) - outer.support(w)))


def iter_rows(region: RateRegion) -> Iterable[tuple[float, float]]:
    for r1, r2 in region.vertices:
        yield float(r1), float(r2)
