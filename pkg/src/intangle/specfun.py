"""Real and complex error-function family with overflow-safe scaled variants.

Everything is self-contained: Maclaurin series, asymptotic series, and a
rational approximation of the Faddeeva function shared with the compiled
backend.  The scaled forms (``exp(-x^2)erfi(x)``, the scaled imaginary part
of ``erf`` on a complex line) remain finite where the plain values overflow
double precision, which is what the angular-momentum amplitude formulas
need for strongly edge-peaked states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import backend

__all__ = [
    "CancellationError",
    "ScaledErfiValue",
    "HyperbolicPair",
    "erf_real",
    "erfi",
    "faddeeva_w",
    "im_erf_complex",
    "im_erf_scaled",
    "hyperbolics",
]

# exp(x) overflows binary64 just above this
_EXP_MAX = 709.0782712893384

# More relative error than this in a cancelling combination means more than
# six digits lost, which downstream promises cannot absorb.
_COND_LIMIT = 1e6


class CancellationError(ArithmeticError):
    """A scaled combination lost too many digits to cancellation."""


@dataclass(frozen=True)
class ScaledErfiValue:
    """erfi at a real argument, carried in plain and scaled form.

    Attributes
    ----------
    value : float
        erfi(x); ``inf`` when exp(x**2) is not representable.
    scaled : float
        exp(-x**2) * erfi(x), finite for every finite x.
    x : float
        The argument the pair was evaluated at.
    """

    value: float
    scaled: float
    x: float


@dataclass(frozen=True)
class HyperbolicPair:
    coth: float
    cosech: float


def erf_real(x: float) -> float:
    """Error function of a real argument (relative error below 1e-14)."""
    return backend.erf_real(float(x))


def erfi(x: float) -> ScaledErfiValue:
    """Imaginary error function erfi(x) = -i erf(ix) of a real argument.

    Returns both the plain value and the scaled form exp(-x**2)*erfi(x).
    The scaled form is always finite; the plain value saturates to a signed
    infinity once exp(x**2) overflows (|x| > ~26.6).
    """
    x = float(x)
    scaled = backend.erfi_scaled_real(x)
    x2 = x * x
    if x2 > _EXP_MAX:
        value = math.copysign(math.inf, x) if x != 0.0 else 0.0
    else:
        value = scaled * math.exp(x2)
    return ScaledErfiValue(value=value, scaled=scaled, x=x)


def faddeeva_w(x: float, y: float) -> complex:
    """Faddeeva function w(x + iy) = exp(-z^2)erfc(-iz) for y >= 0."""
    if y < 0.0:
        raise ValueError("faddeeva_w requires a non-negative imaginary part")
    return backend.wofz_point(float(x), float(y))


def im_erf_scaled(x: float, y: float) -> float:
    """exp(x**2 - y**2) * Im erf(x + iy) for y >= 0, computed without
    forming either exponential.

    With w = w(-y + i|x|) the combination equals
    ``sin(2|x|y)*Re(w) - cos(2|x|y)*Im(w)``; it is even in x.  Raises
    :class:`CancellationError` when the two terms cancel so strongly that
    more than six digits are lost.
    """
    if y < 0.0:
        raise ValueError("im_erf_scaled requires y >= 0")
    ax = abs(float(x))
    y = float(y)
    w = backend.wofz_point(-y, ax)
    phase = 2.0 * ax * y
    s = math.sin(phase)
    c = math.cos(phase)
    combo = s * w.real - c * w.imag
    magnitude = abs(s * w.real) + abs(c * w.imag)
    if magnitude > 0.0 and abs(combo) * _COND_LIMIT < magnitude:
        raise CancellationError(
            f"Im erf({x} + {y}j): cancellation amplifies rounding by "
            f"{magnitude / abs(combo):.1e}"
        )
    return combo


def im_erf_complex(x: float, y: float) -> float:
    """Im erf(x + iy) for y >= 0.

    The plain imaginary part grows like exp(y**2 - x**2); when that factor
    is not representable the result saturates to a signed infinity.
    """
    if y < 0.0:
        raise ValueError("im_erf_complex requires y >= 0 (use symmetry)")
    scaled = im_erf_scaled(x, y)
    arg = (float(y) - float(x)) * (float(y) + float(x))
    if arg > _EXP_MAX:
        return math.copysign(math.inf, scaled) if scaled != 0.0 else 0.0
    return scaled * math.exp(arg)


def hyperbolics(x: float) -> HyperbolicPair:
    """coth(x) and cosech(x) for x > 0, overflow- and underflow-safe."""
    x = float(x)
    if x <= 0.0:
        raise ValueError("hyperbolics requires x > 0 (pole at 0)")
    if x < 1e-8:
        # leading series terms; the quadratic corrections are below rounding
        return HyperbolicPair(coth=(1.0 + x * x / 3.0) / x,
                              cosech=(1.0 - x * x / 6.0) / x)
    if x > 700.0:
        # sinh overflows; exp(-3x) corrections are far below one ulp
        return HyperbolicPair(coth=1.0, cosech=2.0 * math.exp(-x))
    sh = math.sinh(x)
    return HyperbolicPair(coth=math.cosh(x) / sh, cosech=1.0 / sh)
