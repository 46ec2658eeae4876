"""Sum-rate optimal lambda and the impossibility check outside the pdc regime.

Run: python3 demos/05_sum_rate_lambda.py
"""

import numpy as np

from gcifc import ChannelParams, capacity_impossibility_check, sum_rate_optimal_lambda
from gcifc.achievable import achievable_caps, perfect_dpc_region
from gcifc.core import support_gap
from gcifc.lambda_opt import sum_rate_coefficients, sum_rate_optimal_region

ch = ChannelParams(2.0, 3.0, 6.0, 6.0)
for alpha in (0.1, 0.5, 1.0):
    c = sum_rate_coefficients(ch, alpha)
    roots = sum_rate_optimal_lambda(ch, alpha)
    res = [float(np.subtract(sum(achievable_caps(ch, alpha, r)[:2]), achievable_caps(ch, alpha, r)[2]))
           for r in roots]
    print(f"alpha={alpha}: coefficients {np.round(c, 3)}, roots {[round(r.real, 4) for r in roots]},"
          f" residuals {[f'{v:.1e}' for v in res]}")

opt = sum_rate_optimal_region(ch, 501)
perfect = perfect_dpc_region(ch, 501)
print(f"sum-rate optimal region beyond perfect DPC: {support_gap(opt, perfect):.4f} bits")
print(f"sum rate: optimal {opt.support([1, 1]):.4f}, perfect DPC {perfect.support([1, 1]):.4f}")

# no pdc: some outer point is out of reach of the DPC scheme
print("outer bound not achievable here:", capacity_impossibility_check(ch, 201, 201))
