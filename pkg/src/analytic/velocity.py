"""Lieb-Robinson velocities: the chain value and its angular dependence on square lattices.

The planar and cubic formulas are evaluated through direction cosines.
For a direction with cosines c (any scale) and f = |c| / ||c||_1,

    v_LR = v_chain * exp(H(f) / 4) * ||c||_2 / ||c||_1,    H(f) = -sum f ln f,

which is the tan-based expression with its factors rewritten: the
quarter-power factor is prod f**-f = exp(H(f)) and the last factor is
||c||_2 / ||c||_1. The rewriting removes the 0**0 terms of the tan form at
theta = 0 (using the limit f ln f -> 0, scipy's entr) and the infinite
tangent at the equator (the polar cosine is simply 0 there).

Angles are radians. The planar formula covers 0 <= theta <= pi/4; the
cubic one covers the wedge 0 <= theta <= pi/4 with cos(phi) <= sin(phi) sin(theta),
i.e. direction cosines ordered x >= y >= z >= 0. Any other direction is
mapped into the wedge by the reduce_* helpers.
"""

import math
from typing import Sequence, Tuple

import numpy as np
from scipy.special import entr

from ..constants import E_PI
from ..errors import AngleDomainError, LRFrontError
from ..schemas.analytic import VelocityPoint, VelocityProfile

QUARTER_PI = math.pi / 4
_ANGLE_TOL = 1e-12
_ZERO_COSINE = 1e-15


def v_lr_chain(delta_over_gamma: float) -> float:
    """e*pi*sqrt(Delta / 2 gamma), qubits per unit t/tau."""
    if not delta_over_gamma > 0:
        raise LRFrontError(f"delta_over_gamma must be positive, got {delta_over_gamma}")
    return E_PI * math.sqrt(delta_over_gamma / 2.0)


def v_lr_chain_dimensional(delta: float, gamma: float, hbar: float = 1.0) -> float:
    """Chain velocity in qubits per unit time: (e / sqrt 2) sqrt(Delta gamma) / hbar."""
    if not gamma > 0 or not hbar > 0:
        raise LRFrontError("gamma and hbar must be positive")
    return v_lr_chain(delta / gamma) * gamma / (math.pi * hbar)


def to_dimensionless_time(t: float, gamma: float, hbar: float = 1.0) -> float:
    """t / tau with tau = pi hbar / gamma."""
    return t * gamma / (math.pi * hbar)


def from_dimensionless_time(t_over_tau: float, gamma: float, hbar: float = 1.0) -> float:
    return t_over_tau * math.pi * hbar / gamma


def direction_factor(cosines: Sequence[float]) -> float:
    """exp(H(f)/4) * ||c||_2 / ||c||_1; 1 on a lattice axis."""
    c = np.abs(np.asarray(cosines, dtype=float))
    c[c < _ZERO_COSINE * c.max(initial=0.0)] = 0.0
    l1 = c.sum()
    if l1 == 0:
        raise AngleDomainError("zero direction vector")
    f = c / l1
    entropy = float(entr(f).sum())
    return math.exp(entropy / 4.0) * float(np.linalg.norm(c)) / float(l1)


def _check_theta(theta: float) -> None:
    if not -_ANGLE_TOL <= theta <= QUARTER_PI + _ANGLE_TOL:
        raise AngleDomainError(f"theta={theta!r} outside [0, pi/4]; reduce it first")


def v_lr_2d(theta: float, delta_over_gamma: float) -> float:
    """Planar square-lattice velocity at azimuth theta in [0, pi/4]."""
    _check_theta(theta)
    if theta <= 0:
        return v_lr_chain(delta_over_gamma)
    return v_lr_chain(delta_over_gamma) * direction_factor((math.cos(theta), math.sin(theta)))


def in_wedge_3d(theta: float, phi: float) -> bool:
    if not -_ANGLE_TOL <= theta <= QUARTER_PI + _ANGLE_TOL:
        return False
    if not 0 <= phi <= math.pi / 2 + _ANGLE_TOL:
        return False
    return math.cos(phi) <= math.sin(phi) * math.sin(max(theta, 0.0)) + _ANGLE_TOL


def v_lr_3d(theta: float, phi: float, delta_over_gamma: float) -> float:
    """Cubic-lattice velocity at azimuth theta and polar angle phi inside the wedge."""
    if not in_wedge_3d(theta, phi):
        raise AngleDomainError(
            f"(theta, phi)=({theta!r}, {phi!r}) outside the fundamental wedge; reduce it first"
        )
    theta = max(theta, 0.0)
    sin_phi = math.sin(phi)
    cosines = (math.cos(theta) * sin_phi, math.sin(theta) * sin_phi, math.cos(phi))
    return v_lr_chain(delta_over_gamma) * direction_factor(cosines)


def v_lr_2d_printed(theta: float, delta_over_gamma: float) -> float:
    """The tan-based planar expression taken literally; open interval 0 < theta <= pi/4 only."""
    t = math.tan(theta)
    quarter = ((1 + t) / t ** (t / (t + 1))) ** 0.25
    return v_lr_chain(delta_over_gamma) * quarter * math.sqrt(1 + t * t) / (1 + t)


def v_lr_3d_printed(theta: float, phi: float, delta_over_gamma: float) -> float:
    """The tan-based P, Q, R expression taken literally; interior of the wedge only."""
    t = math.tan(theta)
    tp = math.tan(phi)
    u = math.sqrt((1 + t * t) / (tp * tp))
    p = 1 + t + u
    q = t ** (t / p) * u ** (u / p)
    r = math.sqrt(1 + t * t + tp * tp + t * t * tp * tp) / (tp + tp * t + math.sqrt(1 + t * t))
    return v_lr_chain(delta_over_gamma) * (p / q) ** 0.25 * r


def reduce_direction_2d(x: float, y: float) -> float:
    """Azimuth in [0, pi/4] equivalent to (x, y) under the square's symmetry group."""
    a, b = sorted((abs(x), abs(y)), reverse=True)
    if a == 0:
        raise AngleDomainError("zero direction vector")
    return math.atan2(b, a)


def reduce_angle_2d(theta: float) -> float:
    return reduce_direction_2d(math.cos(theta), math.sin(theta))


def reduce_direction_3d(x: float, y: float, z: float) -> Tuple[float, float]:
    """(theta, phi) in the fundamental wedge equivalent to (x, y, z) under the cube's symmetry group."""
    a, b, c = sorted((abs(x), abs(y), abs(z)), reverse=True)
    if a == 0:
        raise AngleDomainError("zero direction vector")
    return math.atan2(b, a), math.atan2(math.hypot(a, b), c)


def reduce_angles_3d(theta: float, phi: float) -> Tuple[float, float]:
    sin_phi = math.sin(phi)
    return reduce_direction_3d(sin_phi * math.cos(theta), sin_phi * math.sin(theta), math.cos(phi))


def velocity_profile_2d(delta_over_gamma: float, steps: int = 64) -> VelocityProfile:
    """v_LR(theta) on an even grid of ``steps`` angles over [0, pi/4]."""
    if steps < 1:
        raise LRFrontError("steps must be positive")
    thetas = np.linspace(0.0, QUARTER_PI, steps) if steps > 1 else np.array([0.0])
    points = [
        VelocityPoint(theta=float(th), velocity=v_lr_2d(float(th), delta_over_gamma)) for th in thetas
    ]
    return VelocityProfile(
        dimension=2,
        delta_over_gamma=delta_over_gamma,
        axis_velocity=v_lr_chain(delta_over_gamma),
        points=points,
    )


def velocity_profile_3d(delta_over_gamma: float, steps: int = 16) -> VelocityProfile:
    """v_LR over the wedge: ``steps`` azimuths, each with ``steps`` polar angles down to the wedge edge."""
    if steps < 1:
        raise LRFrontError("steps must be positive")
    points = []
    thetas = np.linspace(0.0, QUARTER_PI, steps) if steps > 1 else np.array([0.0])
    for th in thetas:
        th = float(th)
        phi_min = math.atan2(1.0, math.sin(th))
        phis = np.linspace(phi_min, math.pi / 2, steps) if steps > 1 else np.array([math.pi / 2])
        for ph in phis:
            points.append(
                VelocityPoint(theta=th, phi=float(ph), velocity=v_lr_3d(th, float(ph), delta_over_gamma))
            )
    return VelocityProfile(
        dimension=3,
        delta_over_gamma=delta_over_gamma,
        axis_velocity=v_lr_chain(delta_over_gamma),
        points=points,
    )
