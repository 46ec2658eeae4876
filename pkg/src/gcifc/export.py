"""CSV/JSON writers and readers for regions, sweeps and maps, plus static SVG views.

SVG files are rendered from the same arrays that go into the CSV files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .core import RateRegion
from .regimes import FLAG_NAMES, RegimeGrid

REGION_HEADER = ["r1_bits", "r2_bits"]
SWEEP_HEADER = ["lambda_re", "lambda_im", "r1_bits", "r2_bits", "sum_bits"]
D_HEADER = ["lambda_re", "lambda_im", "d_r1_bits", "d_r2_bits"]
REGIME_HEADER = ["a", "b_mag", *FLAG_NAMES]
GAP_HEADER = ["a", "b_mag", "P", "condition"]
ROOTS_HEADER = ["alpha", "lambda_root_1", "lambda_root_2"]


def _num(x) -> str:
    return repr(float(x) + 0.0)  # no "-0.0" cells


def _write(path, header, rows):
    path = Path(path)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    return path


def _read(path, header):
    with Path(path).open(newline="") as fh:
        r = csv.reader(fh)
        got = next(r)
        if got != header:
            raise ValueError(f"{path}: expected header {header}, got {got}")
        return [row for row in r]


def write_region_csv(path, region: RateRegion):
    return _write(path, REGION_HEADER, ([_num(x), _num(y)] for x, y in region.vertices))


def read_region_csv(path) -> RateRegion:
    return RateRegion(np.array(_read(path, REGION_HEADER), dtype=float))


def write_region_json(path, region: RateRegion):
    Path(path).write_text(region.to_json() + "\n")
    return Path(path)


def write_sweep_csv(path, sweep):
    rows = ([_num(l.real), _num(l.imag), _num(r1), _num(r2), _num(s)]
            for l, r1, r2, s in zip(sweep["lam"], sweep["r1"], sweep["r2"], sweep["sum"]))
    return _write(path, SWEEP_HEADER, rows)


def read_sweep_csv(path) -> np.ndarray:
    return np.array(_read(path, SWEEP_HEADER), dtype=float).reshape(-1, 5)


def write_d_csv(path, lams, points):
    rows = ([_num(l.real), _num(l.imag), _num(p.r1), _num(p.r2)] for l, p in zip(lams, points))
    return _write(path, D_HEADER, rows)


def read_d_csv(path) -> np.ndarray:
    return np.array(_read(path, D_HEADER), dtype=float).reshape(-1, 4)


def write_regime_csv(path, grid: RegimeGrid):
    rows = ([_num(a), _num(b), *map(str, flags)] for a, b, *flags in grid.rows())
    return _write(path, REGIME_HEADER, rows)


def read_regime_csv(path) -> np.ndarray:
    return np.array(_read(path, REGIME_HEADER), dtype=float).reshape(-1, len(REGIME_HEADER))


def write_gap_csv(path, P, a, b, cond):
    rows = ([_num(a[j]), _num(b[i]), _num(P), str(int(cond[i, j]))]
            for i in range(len(b)) for j in range(len(a)))
    return _write(path, GAP_HEADER, rows)


def read_gap_csv(path) -> np.ndarray:
    return np.array(_read(path, GAP_HEADER), dtype=float).reshape(-1, 4)


def write_roots_csv(path, alphas, roots):
    """One row per alpha; blank cells where a root is absent, the second
    cell blank when the two roots coincide."""
    rows = []
    for al, (x1, x2) in zip(alphas, roots):
        vals = sorted({float(x.real) for x in (x1, x2) if np.isfinite(x.real)})
        cells = [_num(v) for v in vals] + [""] * (2 - len(vals))
        rows.append([_num(al), *cells])
    return _write(path, ROOTS_HEADER, rows)


def write_json(path, obj):
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    return Path(path)


_PALETTE = ["#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#ff7f0e", "#8c564b"]


def svg_regions(path, regions: dict, points: dict | None = None, size: int = 480):
    """Overlay of region polygons (and labelled points) in the rate plane."""
    points = points or {}
    allv = np.vstack([r.vertices for r in regions.values()] +
                     [np.array([p]) for p in points.values()] + [np.ones((1, 2)) * 1e-9])
    xmax, ymax = allv[:, 0].max() * 1.05, allv[:, 1].max() * 1.05
    pad = 40
    sx = (size - 2 * pad) / xmax
    sy = (size - 2 * pad) / ymax

    def tr(x, y):
        return pad + x * sx, size - pad - y * sy

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
           f'<rect width="{size}" height="{size}" fill="white"/>']
    for k, (name, reg) in enumerate(regions.items()):
        col = _PALETTE[k % len(_PALETTE)]
        pts = " ".join("%.3f,%.3f" % tr(x, y) for x, y in reg.vertices)
        out.append(f'<polygon points="{pts}" fill="none" stroke="{col}" stroke-width="1.5"/>')
        out.append(f'<text x="{size - pad - 150}" y="{pad + 14 * k}" fill="{col}" '
                   f'font-size="11">{name}</text>')
    for name, (x, y) in points.items():
        px, py = tr(x, y)
        out.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="3" fill="black"/>')
        out.append(f'<text x="{px + 4:.3f}" y="{py - 4:.3f}" font-size="11">{name}</text>')
    out.append(f'<text x="{size / 2}" y="{size - 8}" font-size="11">R1 [bits]</text>')
    out.append(f'<text x="4" y="{pad - 10}" font-size="11">R2 [bits]</text>')
    out.append("</svg>")
    Path(path).write_text("\n".join(out) + "\n")
    return Path(path)


def svg_raster(path, a, b, layers: dict, size: int = 480):
    """Cell raster of boolean layers over the (a, |b|) plane; later layers draw on top."""
    pad = 30
    na, nb = len(a), len(b)
    cw = (size - 2 * pad) / na
    chh = (size - 2 * pad) / nb
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">',
           f'<rect width="{size}" height="{size}" fill="white"/>']
    for k, (name, mask) in enumerate(layers.items()):
        col = _PALETTE[k % len(_PALETTE)]
        out.append(f'<g fill="{col}" fill-opacity="0.45">')
        for i, j in zip(*np.nonzero(mask)):
            x = pad + j * cw
            y = size - pad - (i + 1) * chh
            out.append(f'<rect x="{x:.2f}" y="{y:.2f}" width="{cw:.2f}" height="{chh:.2f}"/>')
        out.append("</g>")
        out.append(f'<text x="{pad}" y="{pad - 14 + 12 * k - 12 * (len(layers) - 1)}" '
                   f'fill="{col}" font-size="11">{name}</text>')
    out.append(f'<text x="{size / 2}" y="{size - 8}" font-size="11">a [{a[0]:g}, {a[-1]:g}]</text>')
    out.append(f'<text x="2" y="{size / 2}" font-size="11">|b|</text>')
    out.append("</svg>")
    Path(path).write_text("\n".join(out) + "\n")
    return Path(path)
