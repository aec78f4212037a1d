"""Degradation order and extremal channels for BMS channels of fixed capacity."""

from .channel import (DiscreteChannel, MassPoint, bec, bhattacharyya, binary_entropy, bsc,
                      capacity, channel_from_json, channel_to_json, entropy, error_probability,
                      kernel_h, load_channel, new_channel, save_channel)
from .errors import BMSError
from .extremal import (CapacityGapRow, ExtremalProfile, bar_inflection, capacity_envelope,
                       capacity_star, capacity_under, envelope_tangent, lambda_envelope,
                       delta_of_z, epsilon_bsc, gamma_of_z, gap_row, lambda_bar,
                       lambda_opt_bruteforce, lambda_star, lambda_under,
                       least_degraded_channel, x_of_z, z_of_x)
from .lambda_order import (Ordering, PiecewiseLinear, compare, entropy_from_lambda, is_degraded,
                           lambda_eval, lambda_profile)
from .numerics import SolverConfig, bisect, integrate_open
from .sampler import SamplerConfig, make_rng, sample_batch, sample_channel

__version__ = "0.1.0"
