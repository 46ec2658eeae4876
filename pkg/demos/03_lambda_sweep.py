"""How the DPC parameter lambda trades R1 against R2 at a fixed power split.

Run: python3 demos/03_lambda_sweep.py
"""

import numpy as np

from gcifc import ChannelParams, SchemeParams, point_d
from gcifc.achievable import lambda_costa_1, lambda_costa_2, lambda_sweep
from gcifc.lambda_opt import perturbation_rates
from gcifc.outer import outer_corner

ch = ChannelParams(np.sqrt(0.3), np.sqrt(2.0), 6.0, 6.0)
alpha = 0.5
lc1, lc2 = lambda_costa_1(ch, alpha), lambda_costa_2(ch, alpha)
print(f"lambda maximizing R1: {lc1.real:.4f}, lambda minimizing R2: {lc2.real:.4f}")

sw = lambda_sweep(ch, alpha, 201)
i1, i2 = np.argmax(sw["r1"]), np.argmin(sw["r2"])
print(f"sweep argmax R1 at {sw['lam'][i1].real:.4f}, argmin R2 at {sw['lam'][i2].real:.4f}")

# distance from the DPC corner D(lambda) to the outer corner C
c = outer_corner(ch, alpha)
dist = [np.hypot(*np.subtract(point_d(ch, SchemeParams(alpha, lam)), c)) for lam in sw["lam"]]
k = int(np.argmin(dist))
print(f"closest D to C at lambda {sw['lam'][k].real:.4f} (distance {dist[k]:.4f}),"
      f" at lambda_C1 the distance is {np.hypot(*np.subtract(point_d(ch, SchemeParams(alpha, lc1)), c)):.4f}")

# moving away from lambda_C1 costs R1 to second order but moves R2 to first order
pr0 = perturbation_rates(ch, alpha, 0)
u = pr0.delta_lambda / abs(pr0.delta_lambda)
for eps in (1e-1, 1e-2, 1e-3):
    pr = perturbation_rates(ch, alpha, eps * u)
    print(f"eps={eps:g}: R1 loss {pr0.r1 - pr.r1:.3e}, R2 change {pr.r2 - pr0.r2:+.3e}")
