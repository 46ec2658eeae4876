"""Classify single channels, then map the regimes over an (a, |b|) grid.

Run: python3 demos/02_regime_map.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np

from gcifc import ChannelParams, classify, regime_map
from gcifc.export import svg_raster, write_regime_csv
from gcifc.regimes import q_alpha, very_strong_lhs

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out") / "regimes"
out.mkdir(parents=True, exist_ok=True)

for ch in (ChannelParams(0.3, 0.5, 10, 10), ChannelParams(3.0, np.sqrt(2), 1, 1),
           ChannelParams(-1.0, 2.0, 10, 10), ChannelParams(0.5, 2.0, 10, 10)):
    lab = classify(ch)
    extra = ""
    if ch.b_mag > 1:
        extra = f"  Q(0)={q_alpha(ch, 0):.1f} Q(1)={q_alpha(ch, 1):.1f} vs_lhs={very_strong_lhs(ch):.1f}"
    print(f"a={ch.a.real:+.2f} |b|={ch.b_mag:.3f} P=({ch.P1:g},{ch.P2:g}): {lab.flags()}{extra}")

grid = regime_map(10, 10, (-5, 5), (0, 5), 201)
for name, mask in grid.flags.items():
    print(f"{name:12s} {mask.mean():6.1%} of the grid")

write_regime_csv(out / "regime_map.csv", grid)
svg_raster(out / "regime_map.svg", grid.a, grid.b_mag,
           {"pdc": grid.flags["pdc"], "very_strong": grid.flags["very_strong"], "weak": grid.flags["weak"]})
print("wrote", out)
