"""Closed-form approximations to the exact uncertainty data.

Three regimes, each returning a report comparable against
:func:`intangle.continuum.report`:

* perturbative: first order in lambda about the flat state;
* wavefunction: the edge-layer profile for strongly edge-growing states,
  where only a thin region near the window edge carries weight;
* lorentzian: the amplitude profile c_m ~ (-1)**m / (lambda**2*pi**2 + m**2)
  of the same regime, with its contour-sum normalization.

The contour-integration sum identities these rest on are exposed in
:func:`closed_sums` with brute-force summation as their oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .continuum import AngularDistribution
from .specfun import hyperbolics

__all__ = [
    "ApproxReport",
    "LorentzianResult",
    "SumIdentities",
    "perturbative_report",
    "perturbative_state",
    "perturbative_wavefunction",
    "wavefunction_report",
    "lorentzian_report",
    "closed_sums",
    "alternating_fourier",
    "lorentzian_sum",
    "lorentzian_m2_sum",
    "INV_M4_SUM",
]

PI = math.pi
TWO_PI = 2.0 * math.pi

# Sum over m != 0 of 1/m**4, by contour integration.
INV_M4_SUM = PI**4 / 45.0


@dataclass(frozen=True)
class ApproxReport:
    """One approximation's outputs; None marks a quantity the method does
    not produce (or that leaves its real domain), and ``valid`` flags
    whether lambda lies in the method's stated regime."""

    method: str
    lam: float
    delta_phi: Optional[float]
    delta_m: Optional[float]
    product: Optional[float]
    bound: Optional[float]
    valid: bool


def perturbative_report(lam: float) -> ApproxReport:
    """First order in lambda about the flat state.

    delta_phi = (pi/sqrt(3))(1 - 2*lambda*pi**2/15); product and bound both
    equal |lambda|*pi**2/3, so the equality of the uncertainty relation
    holds identically at this order.  Trusted for |lambda| <= 0.1.
    """
    lam = float(lam)
    delta_phi = (PI / math.sqrt(3.0)) * (1.0 - 2.0 * lam * PI * PI / 15.0)
    delta_m = abs(lam) * delta_phi
    first_order = abs(lam) * PI * PI / 3.0
    return ApproxReport(method="perturbative", lam=lam, delta_phi=delta_phi,
                        delta_m=delta_m, product=first_order,
                        bound=first_order, valid=abs(lam) <= 0.1)


def perturbative_state(lam: float, m_max: int) -> AngularDistribution:
    """First-order amplitudes c_0 = 1/N, c_m = -lambda*(-1)**m/(m**2 N)
    with N**2 = 1 + lambda**2*pi**4/45, truncated at |m| <= m_max."""
    lam = float(lam)
    if abs(lam) > 0.5:
        raise ValueError("perturbative amplitudes need |lambda| <= 0.5")
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    norm = math.sqrt(1.0 + lam * lam * PI**4 / 45.0)
    ms = np.arange(-m_max, m_max + 1)
    signs = np.where(ms & 1, -1.0, 1.0)
    with np.errstate(divide="ignore"):
        amps = -lam * signs / np.where(ms == 0, 1.0, ms * ms) / norm
    amps[m_max] = 1.0 / norm
    envelope = abs(lam) / norm
    tail = 2.0 * envelope * envelope / (3.0 * m_max**3)
    return AngularDistribution(lam=lam, m_max=int(m_max), amplitudes=amps,
                               tail_bound=tail, envelope=envelope)


def perturbative_wavefunction(lam: float, phi):
    """The first-order wavefunction (1 + lambda*(pi**2/6 - phi**2/2))
    divided by N*sqrt(2*pi); the closed form the truncated amplitude sum
    reconstructs."""
    lam = float(lam)
    norm = math.sqrt(1.0 + lam * lam * PI**4 / 45.0)
    phi = np.asarray(phi, dtype=float)
    out = (1.0 + lam * (PI * PI / 6.0 - phi * phi / 2.0)) / (norm * math.sqrt(TWO_PI))
    return float(out) if out.ndim == 0 else out


def wavefunction_report(lam: float) -> ApproxReport:
    """Edge-layer approximation for lam < 0.

    With a = |lambda|: (delta_phi)**2 = pi**2 - 1/a, delta_m = a*pi -
    1/(2*pi), product = a*pi**2 - 1, and the refined edge density
    P(pi) = a*pi - 1/(2*pi) makes bound coincide with product exactly.
    Trusted for a*pi**2 > 3.
    """
    lam = float(lam)
    if lam >= 0.0:
        raise ValueError("the edge-layer approximation needs lambda < 0")
    a = -lam
    dphi_sq = PI * PI - 1.0 / a
    delta_phi = math.sqrt(dphi_sq) if dphi_sq > 0.0 else None
    dm = a * PI - 1.0 / TWO_PI
    delta_m = dm if dm > 0.0 else None
    prod = a * PI * PI - 1.0
    product = prod if prod >= 0.0 else None
    # refined P(pi) = a*pi - 1/(2*pi), so 1 - 2*pi*P(pi) = 2 - 2*a*pi**2
    bound = abs(a * PI * PI - 1.0)
    return ApproxReport(method="wavefunction", lam=lam, delta_phi=delta_phi,
                        delta_m=delta_m, product=product, bound=bound,
                        valid=a * PI * PI > 3.0)


@dataclass(frozen=True)
class LorentzianResult:
    """Lorentzian-profile report plus its amplitude distribution and the
    simplified uncertainty pi*|lambda| (populated once a = |lambda|*pi**2
    is past 3, where the cosech corrections are negligible)."""

    report: ApproxReport
    amplitudes: AngularDistribution
    simplified_delta_m: Optional[float]


def lorentzian_report(lam: float, m_max: int) -> LorentzianResult:
    """Lorentzian amplitude model for lam < 0.

    Amplitudes c_m = (-1)**m * 2*a*pi / ((a**2*pi**2 + m**2) *
    sqrt(2*pi*B)) with a = |lambda| and B = pi*cosech(a*pi**2)**2 +
    coth(a*pi**2)/(a*pi); the exponential of the raw normalization cancels
    analytically, so nothing here can overflow.  The full angular-momentum
    uncertainty is

        delta_m = pi*a*sqrt((coth(A) - A*cosech(A)**2) /
                            (coth(A) + A*cosech(A)**2)),  A = a*pi**2.
    """
    lam = float(lam)
    if lam >= 0.0:
        raise ValueError("the Lorentzian approximation needs lambda < 0")
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    a = -lam
    big_a = a * PI * PI
    hyp = hyperbolics(big_a)
    csch_sq = hyp.cosech * hyp.cosech
    bracket = PI * csch_sq + hyp.coth / (a * PI)
    prefactor = 2.0 * a * PI / math.sqrt(TWO_PI * bracket)
    ms = np.arange(-m_max, m_max + 1)
    signs = np.where(ms & 1, -1.0, 1.0)
    amps = signs * prefactor / (a * a * PI * PI + ms.astype(float) ** 2)
    tail = 2.0 * prefactor * prefactor / (3.0 * m_max**3)
    dist = AngularDistribution(lam=lam, m_max=int(m_max), amplitudes=amps,
                               tail_bound=tail, envelope=prefactor)
    ratio = (hyp.coth - big_a * csch_sq) / (hyp.coth + big_a * csch_sq)
    delta_m = PI * a * math.sqrt(ratio) if ratio > 0.0 else None
    valid = big_a > 3.0
    rep = ApproxReport(method="lorentzian", lam=lam, delta_phi=None,
                       delta_m=delta_m, product=None, bound=None, valid=valid)
    simplified = PI * a if valid else None
    return LorentzianResult(report=rep, amplitudes=dist,
                            simplified_delta_m=simplified)


# ---------------------------------------------------------------------------
# Contour-integration sum identities.

def alternating_fourier(phi: float) -> float:
    """Sum over m != 0 of (-1)**m exp(i*m*phi)/m**2 = phi**2/2 - pi**2/6
    on [-pi, pi] (real, since the terms pair into cosines)."""
    phi = float(phi)
    if not -PI <= phi <= PI:
        raise ValueError("the closed form holds on [-pi, pi]")
    return phi * phi / 2.0 - PI * PI / 6.0


def lorentzian_sum(a: float) -> float:
    """Sum over all integers m of 1/(a**2 + m**2)**2."""
    if a <= 0.0:
        raise ValueError("a must be positive")
    hyp = hyperbolics(PI * a)
    return (PI / (2.0 * a**3)) * hyp.coth + (PI * PI / (2.0 * a * a)) * hyp.cosech**2


def lorentzian_m2_sum(a: float) -> float:
    """Sum over all integers m of m**2/(a**2 + m**2)**2."""
    if a <= 0.0:
        raise ValueError("a must be positive")
    hyp = hyperbolics(PI * a)
    return (PI / (2.0 * a)) * hyp.coth - (PI * PI / 2.0) * hyp.cosech**2


@dataclass(frozen=True)
class SumIdentities:
    """The contour-integration identities as one record: the numeric
    inverse-fourth-power sum and the three parametric closed forms."""

    inv_m4: float
    lorentzian_sum: Callable[[float], float]
    lorentzian_m2_sum: Callable[[float], float]
    alternating_fourier: Callable[[float], float]


def closed_sums() -> SumIdentities:
    """All contour-integration sum identities used by the approximations."""
    return SumIdentities(inv_m4=INV_M4_SUM, lorentzian_sum=lorentzian_sum,
                         lorentzian_m2_sum=lorentzian_m2_sum,
                         alternating_fourier=alternating_fourier)
