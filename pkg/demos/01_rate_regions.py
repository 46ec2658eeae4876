"""Outer bound and DPC inner bound for one channel, written to CSV and SVG.

Run: python3 demos/01_rate_regions.py [outdir]
"""

import sys
from pathlib import Path

from gcifc import ChannelParams, achievable_region, outer_region
from gcifc.achievable import perfect_dpc_region
from gcifc.core import support_gap
from gcifc.export import svg_regions, write_region_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out") / "regions"
out.mkdir(parents=True, exist_ok=True)
ch = ChannelParams(a=-1.0, b_mag=2.0, P1=10.0, P2=10.0)

outer = outer_region(ch, 201)
inner = achievable_region(ch, 201, 81)
perfect = perfect_dpc_region(ch, 201)

print("channel:", ch)
print(f"outer max R1 {outer.max_r1():.4f}, max R2 {outer.max_r2():.4f}")
print(f"inner max R1 {inner.max_r1():.4f}, max R2 {inner.max_r2():.4f}")
# same alpha grid on both sides, so the inner region never sticks out
print(f"inner beyond outer (bits): {support_gap(inner, outer):.2e}")
# primary decodes cognitive here, so perfect DPC reaches the outer bound
print(f"outer beyond perfect DPC (bits): {support_gap(outer, perfect):.2e}")

write_region_csv(out / "outer.csv", outer)
write_region_csv(out / "inner.csv", inner)
svg_regions(out / "regions.svg", {"outer": outer, "inner": inner})
print("wrote", out)
