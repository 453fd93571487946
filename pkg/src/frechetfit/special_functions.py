"""Gamma function, its logarithm, and truncated expansions around the pole at 0.

The expansion coefficients are built from three constants (Euler-Mascheroni
gamma, pi^2/6 = zeta(2), and the Apery constant zeta(3)) stored as fixed
decimal literals; the test suite recomputes them by series acceleration.
"""

import math
from dataclasses import dataclass

from .errors import DomainError, GammaRangeError, PoleError

__all__ = [
    "MathConstants",
    "LaurentCoefficients",
    "CONSTANTS",
    "LAURENT",
    "gamma",
    "log_gamma",
    "gamma_laurent",
    "gamma_plus_one_taylor",
]

_EULER_GAMMA = 0.57721566490153286
_PI_SQ_OVER_6 = 1.6449340668482264
_APERY = 1.2020569031595943

# gamma(z) overflows a 64-bit float just above this argument
_GAMMA_OVERFLOW = 171.62437695630272


@dataclass(frozen=True)
class MathConstants:
    """The three constants entering the expansion coefficients."""

    euler_gamma: float = _EULER_GAMMA
    pi_sq_over_6: float = _PI_SQ_OVER_6
    apery: float = _APERY


@dataclass(frozen=True)
class LaurentCoefficients:
    """Coefficients of Gamma(z) = c_minus1/z + c0 + c1*z + c2*z^2 + O(z^3)."""

    c_minus1: float = 1.0
    c0: float = -_EULER_GAMMA
    c1: float = (_EULER_GAMMA**2 + _PI_SQ_OVER_6) / 2.0
    c2: float = -(_EULER_GAMMA**3 + _EULER_GAMMA * math.pi**2 / 2.0 + 2.0 * _APERY) / 6.0

    @classmethod
    def from_constants(cls, constants: MathConstants = MathConstants()) -> "LaurentCoefficients":
        g = constants.euler_gamma
        z2 = constants.pi_sq_over_6
        z3 = constants.apery
        return cls(
            c_minus1=1.0,
            c0=-g,
            c1=(g * g + z2) / 2.0,
            c2=-(g**3 + g * (math.pi**2) / 2.0 + 2.0 * z3) / 6.0,
        )


CONSTANTS = MathConstants()
LAURENT = LaurentCoefficients.from_constants(CONSTANTS)


def gamma(z: float) -> float:
    """Gamma function for real arguments.

    Supports z > 0 up to the float overflow threshold and one recurrence
    step Gamma(z) = Gamma(z+1)/z for z in (-1, 0), which is the only
    negative range this package needs.
    """
    if not math.isfinite(z):
        raise DomainError(f"gamma requires a finite argument, got {z!r}")
    if z <= 0.0 and z == math.floor(z):
        raise PoleError(f"gamma has a pole at z = {z}")
    if z > _GAMMA_OVERFLOW:
        raise GammaRangeError(f"gamma({z}) overflows 64-bit floating point")
    if -1.0 < z < 0.0:
        return math.gamma(z + 1.0) / z
    if z < 0.0:
        raise DomainError(f"gamma not supported for z <= -1, got {z}")
    return math.gamma(z)


def log_gamma(z: float) -> float:
    """Natural log of Gamma(z) for z > 0; stable where gamma would overflow."""
    if not (z > 0.0) or not math.isfinite(z):
        raise DomainError(f"log_gamma requires z > 0, got {z!r}")
    return math.lgamma(z)


def gamma_laurent(z: float, order: int = 2) -> float:
    """Truncated expansion of Gamma(z) around its pole at z = 0.

    order=1 keeps terms through z, order=2 through z^2.  Accuracy is only
    meaningful for |z| < 1; the remainder is O(z^(order+1)).
    """
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order!r}")
    if z == 0.0:
        raise DomainError("gamma_laurent is singular at z = 0")
    c = LAURENT
    result = c.c_minus1 / z + c.c0 + c.c1 * z
    if order == 2:
        result += c.c2 * z * z
    return result


def gamma_plus_one_taylor(z: float, order: int = 3) -> float:
    """Taylor polynomial of Gamma(z+1) about z = 0, truncated after z^order.

    Follows from z*Gamma(z) applied to the pole expansion, so the
    coefficients are 1, -gamma, c1, c2 in increasing powers.
    """
    if order not in (2, 3):
        raise DomainError(f"order must be 2 or 3, got {order!r}")
    c = LAURENT
    result = c.c_minus1 + c.c0 * z + c.c1 * z * z
    if order == 3:
        result += c.c2 * z * z * z
    return result
