"""Corner points and the constant-gap results for strong interference.

Run: python3 demos/04_gap.py
"""

import numpy as np

from gcifc import ChannelParams, additive_gap, corner_points, gap_certificate, multiplicative_check
from gcifc.gap import additive_gap_value
from gcifc.sampling import random_channels

ch = ChannelParams(-1.0, 2.0, 10.0, 10.0)
print(corner_points(ch))
print(gap_certificate(ch))

chans = random_channels(np.random.default_rng(0), 1000)
gaps = np.array([additive_gap(c) for c in chans])
print(f"1000 random strong channels: max additive gap {gaps.max():.4f} bits,"
      f" multiplicative holds for {sum(map(multiplicative_check, chans))}")

# at P2 = 6 the additive gap peaks at |b|^2 P1 = 7
x = np.linspace(0, 50, 50001)
g = additive_gap_value(x, 6.0)
print(f"P2=6: peak gap {g.max():.6f} bits at |b|^2 P1 = {x[np.argmax(g)]:.3f}")
