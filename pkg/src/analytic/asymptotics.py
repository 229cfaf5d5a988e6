"""Large-k forms of the chain correlation."""

import math

from ..errors import LRFrontError
from ..utils.logspace import LogValue
from .velocity import v_lr_chain

_HALF_LN_2_OVER_PI = 0.5 * math.log(2.0 / math.pi)


def _attenuation(k: int, delta_over_gamma: float) -> float:
    # ln[ sqrt(2/pi) * sqrt(gamma/Delta) * k**-1/2 ]
    if k < 1:
        raise LRFrontError(f"chain site must be >= 1, got {k}")
    return _HALF_LN_2_OVER_PI - 0.5 * math.log(abs(delta_over_gamma)) - 0.5 * math.log(k)


def chain_asymptotic(k: int, delta_over_gamma: float, t_over_tau: float) -> LogValue:
    """Stirling form sqrt(2/pi) sqrt(gamma/Delta) k**-1/2 (v_LR s / (k - 1/2))**(2k-1).

    Crude for small k.
    """
    base = _attenuation(k, delta_over_gamma)
    if t_over_tau < 0:
        raise LRFrontError(f"t/tau must be nonnegative, got {t_over_tau}")
    if t_over_tau == 0:
        return LogValue.zero()
    v = v_lr_chain(abs(delta_over_gamma))
    return LogValue.from_log(base + (2 * k - 1) * (math.log(v * t_over_tau) - math.log(k - 0.5)))


def chain_exponential_front(k: int, delta_over_gamma: float, t_over_tau: float) -> LogValue:
    """e sqrt(2/pi) sqrt(gamma/Delta) k**-1/2 exp(-2 (k - v_LR s)), valid for large k near the front."""
    base = _attenuation(k, delta_over_gamma)
    v = v_lr_chain(abs(delta_over_gamma))
    return LogValue.from_log(1.0 + base - 2.0 * (k - v * t_over_tau))
