"""Inner and outer bounds for the Gaussian cognitive interference channel."""

from .core import (
    GEOM_TOL,
    RATE_TOL,
    ChannelParams,
    DomainError,
    RateConstraintSet,
    RatePair,
    RateRegion,
    SchemeParams,
    cap_c,
    convex_closure,
    pentagon_to_polygon,
)
from .outer import outer_constraints, outer_envelope_strong, outer_region
from .achievable import (
    DpcContext,
    achievable_constraints,
    achievable_region,
    f_rate,
    lambda_costa,
    point_d,
)
from .regimes import classify, regime_map
from .gap import additive_gap, corner_points, gap_certificate, multiplicative_check
from .lambda_opt import (
    capacity_impossibility_check,
    perturbation_rates,
    received_powers,
    sum_rate_optimal_lambda,
)

__version__ = "0.1.0"
