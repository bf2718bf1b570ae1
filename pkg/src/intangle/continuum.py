"""Exact uncertainty analysis for the exponential angle states.

The family psi(phi) = N**-1 * exp(-lambda*phi**2/2) on the window
[-pi, pi) makes the angle/angular-momentum uncertainty product equal its
state-dependent bound |1 - 2*pi*P(pi)|/2 for every real lambda, with P(pi)
the angle density at the window edge.  Negative lambda gives edge-growing
states with arbitrarily large product, positive lambda truncated Gaussians,
and lambda = 0 the flat zero-angular-momentum state.

Everything here is closed-form (error-function family plus stable scaled
combinations); the :mod:`intangle.quad` oracles exist to check it, not to
compute it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend, quad
from .specfun import CancellationError

__all__ = [
    "IntelligentState",
    "UncertaintyReport",
    "AngularDistribution",
    "HermiticityReport",
    "make_state",
    "wavefunction",
    "report",
    "oam_amplitude",
    "oam_amplitudes",
    "oam_distribution",
    "amplitude_envelope",
    "hermiticity_defect",
]

PI = math.pi
TWO_PI = 2.0 * math.pi

# Below this |lambda| the closed form for (delta_phi)**2 hits heavy
# cancellation, so a two-term series in lambda takes over; the switch keeps
# both branches accurate to ~1e-12 relative.
_SERIES_CUT = 1e-7


@dataclass(frozen=True)
class IntelligentState:
    """One member of the exponential family, with stable normalization data.

    Attributes
    ----------
    lam : float
        Family parameter; the sign selects the regime.
    log_norm_sq : float
        ln N**2, always finite (N**2 itself overflows near lam = -7.3).
    norm_kind : str
        "growing" (lam < 0), "flat" (lam = 0), or "gaussian" (lam > 0).
    """

    lam: float
    log_norm_sq: float
    norm_kind: str

    @property
    def norm_sq(self) -> float:
        """N**2, as a plain float (may overflow to inf for lam << 0)."""
        if self.log_norm_sq > 709.0:
            return math.inf
        return math.exp(self.log_norm_sq)

    @property
    def boundary_density(self) -> float:
        """P(pi) = exp(-lam*pi**2)/N**2, the angle density at the edge."""
        return math.exp(-self.lam * PI * PI - self.log_norm_sq)


@dataclass(frozen=True)
class UncertaintyReport:
    """Uncertainties, product, and bound for one lambda (hbar = 1)."""

    lam: float
    delta_phi: float
    delta_m: float
    product: float
    bound: float
    residual: float
    p_pi: float


@dataclass(frozen=True)
class AngularDistribution:
    """Truncated angular-momentum amplitude map m -> c_m.

    ``amplitudes[i]`` holds c_m for m = i - m_max; the coefficients are real
    because the wavefunction is even.  ``tail_bound`` bounds the probability
    outside the truncation, Sum_{|m|>m_max} |c_m|**2, via the quadratic
    envelope |c_m| <= envelope/m**2.
    """

    lam: float
    m_max: int
    amplitudes: np.ndarray
    tail_bound: float
    envelope: float

    def amplitude(self, m: int) -> float:
        """c_m; zero outside the truncation."""
        if abs(m) > self.m_max:
            return 0.0
        return float(self.amplitudes[m + self.m_max])

    def parseval_sum(self) -> float:
        return float(np.sum(self.amplitudes * self.amplitudes))

    def parseval_defect(self) -> float:
        """|1 - Sum |c_m|**2|, the truncation quality measure."""
        return abs(1.0 - self.parseval_sum())

    def second_moment(self) -> float:
        """Sum m**2 |c_m|**2 over the truncated range."""
        ms = np.arange(-self.m_max, self.m_max + 1, dtype=float)
        return float(np.sum(ms * ms * self.amplitudes * self.amplitudes))

    def second_moment_tail_bound(self) -> float:
        """Upper bound on Sum_{|m|>m_max} m**2 |c_m|**2."""
        return 2.0 * self.envelope**2 / self.m_max


@dataclass(frozen=True)
class HermiticityReport:
    """Both sides of the kinetic-moment identity and the boundary term
    that reconciles them."""

    lam: float
    lhs: float
    rhs: float
    boundary_term: float


def _scaled_norm(a: float) -> float:
    """N**2 * exp(-a*pi**2) = sqrt(pi/a)*exp(-a*pi**2)*erfi(sqrt(a)*pi)."""
    return math.sqrt(PI / a) * backend.erfi_scaled_real(math.sqrt(a) * PI)


def make_state(lam: float) -> IntelligentState:
    """Construct the state for any real lambda with stable normalization."""
    lam = float(lam)
    if not math.isfinite(lam):
        raise ValueError("lambda must be finite")
    if lam < 0.0:
        a = -lam
        log_norm_sq = a * PI * PI + math.log(_scaled_norm(a))
        kind = "growing"
    elif lam > 0.0:
        log_norm_sq = math.log(
            math.sqrt(PI / lam) * backend.erf_real(math.sqrt(lam) * PI)
        )
        kind = "gaussian"
    else:
        log_norm_sq = math.log(TWO_PI)
        kind = "flat"
    return IntelligentState(lam=lam, log_norm_sq=log_norm_sq, norm_kind=kind)


def wavefunction(state: IntelligentState, phi):
    """psi(phi) = N**-1 exp(-lambda*phi**2/2) on the window [-pi, pi).

    Accepts a scalar or an array of angles; raises a ValueError for
    arguments outside the window.
    """
    phi_arr = np.asarray(phi, dtype=float)
    if np.any((phi_arr < -PI) | (phi_arr >= PI)):
        raise ValueError("wavefunction domain is [-pi, pi)")
    out = np.exp(-0.5 * (state.lam * phi_arr * phi_arr + state.log_norm_sq))
    if np.ndim(phi) == 0:
        return float(out)
    return out


def _series_report(lam: float) -> UncertaintyReport:
    # (delta_phi)**2 expanded about the flat state; two orders keep the
    # truncation below 1e-12 relative for |lambda| <= 1e-7.
    pi2 = PI * PI
    dphi2 = (pi2 / 3.0) * (1.0 - (4.0 / 15.0) * pi2 * lam
                           + (8.0 / 315.0) * pi2 * pi2 * lam * lam)
    p_pi = (1.0 - 2.0 * lam * dphi2) / TWO_PI
    delta_phi = math.sqrt(dphi2)
    delta_m = abs(lam) * delta_phi
    product = delta_m * delta_phi
    bound = 0.5 * abs(1.0 - TWO_PI * p_pi)
    return UncertaintyReport(lam=lam, delta_phi=delta_phi, delta_m=delta_m,
                             product=product, bound=bound,
                             residual=product - bound, p_pi=p_pi)


def report(lam: float) -> UncertaintyReport:
    """Angle and angular-momentum uncertainties for one lambda.

    Uses the identity (delta_phi)**2 = (1 - 2*pi*P(pi))/(2*lambda), which
    is the closed-form variance with the normalization substituted in; it
    makes the equality of product and bound an algebraic identity, so the
    residual measures only rounding.

    Parameters
    ----------
    lam : float
        Family parameter; any finite real value.

    Returns
    -------
    UncertaintyReport
        delta_phi, delta_m, product, bound, residual, and P(pi).
    """
    lam = float(lam)
    if lam == 0.0:
        delta_phi = PI / math.sqrt(3.0)
        return UncertaintyReport(lam=0.0, delta_phi=delta_phi, delta_m=0.0,
                                 product=0.0, bound=0.0, residual=0.0,
                                 p_pi=1.0 / TWO_PI)
    if abs(lam) <= _SERIES_CUT:
        return _series_report(lam)
    state = make_state(lam)
    p_pi = state.boundary_density
    t = 1.0 - TWO_PI * p_pi
    dphi2 = t / (2.0 * lam)
    delta_phi = math.sqrt(dphi2)
    delta_m = abs(lam) * delta_phi
    product = delta_m * delta_phi
    bound = 0.5 * abs(t)
    return UncertaintyReport(lam=lam, delta_phi=delta_phi, delta_m=delta_m,
                             product=product, bound=bound,
                             residual=product - bound, p_pi=p_pi)


def _growing_amplitude_parts(a: float):
    """Constants of the closed amplitude form for lam = -a < 0."""
    y = math.sqrt(0.5 * a) * PI
    scale = 1.0 / (math.sqrt(a) * math.sqrt(_scaled_norm(a)))
    return y, scale


def oam_amplitude(state: IntelligentState, m: int) -> float:
    """Angular-momentum amplitude c_m = <m|psi>.

    For lam < 0 the closed form reduces, after cancelling the growing
    exponential against the scaled imaginary error function, to

        c_m = -(-1)**m * Im w(-y + i*x) / sqrt(|lambda| * N**2 * exp(-|lambda|*pi**2))

    with x = |m|/sqrt(2|lambda|), y = sqrt(|lambda|/2)*pi and w the Faddeeva
    function, which stays bounded for every m.  For lam > 0 the amplitude
    is a cosine transform of a well-behaved Gaussian, evaluated by
    quadrature.  Raises :class:`CancellationError` if extracting the
    imaginary part would lose more than six digits.
    """
    m = int(m)
    lam = state.lam
    if lam == 0.0:
        return 1.0 if m == 0 else 0.0
    if lam < 0.0:
        a = -lam
        y, scale = _growing_amplitude_parts(a)
        x = abs(m) / math.sqrt(2.0 * a)
        w = backend.wofz_point(-y, x)
        if abs(w.imag) * 1e6 < abs(w):
            raise CancellationError(
                f"c_{m} at lambda={lam}: imaginary part beneath the "
                f"rounding floor of w (|w|/|Im w| = {abs(w) / abs(w.imag):.1e})"
            )
        sign = -1.0 if m & 1 else 1.0
        return -sign * w.imag * scale
    numerator = quad.gauss_fourier(0.5 * lam, abs(m)).value
    n2 = math.exp(state.log_norm_sq)
    return numerator / math.sqrt(TWO_PI * n2)


def oam_amplitudes(state: IntelligentState, ms) -> np.ndarray:
    """Vectorized :func:`oam_amplitude` over an integer array ``ms``."""
    ms = np.asarray(ms, dtype=np.int64)
    lam = state.lam
    if lam == 0.0:
        return (ms == 0).astype(float)
    if lam > 0.0:
        out = np.empty(ms.shape, dtype=float)
        flat = ms.ravel()
        values = {}
        for m in np.unique(np.abs(flat)):
            values[int(m)] = oam_amplitude(state, int(m))
        out.ravel()[:] = [values[int(abs(m))] for m in flat]
        return out
    a = -lam
    y, scale = _growing_amplitude_parts(a)
    xs = np.abs(ms).astype(float) / math.sqrt(2.0 * a)
    # condition estimate: |w|/|Im w| ~ |z|/y far from the origin
    worst = math.hypot(y, float(xs.max(initial=0.0))) / y
    if worst > 1e6:
        raise CancellationError(
            f"amplitude sweep at lambda={lam}: condition estimate {worst:.1e} "
            "exceeds 1e6 (six digits lost); reduce the m range"
        )
    imw = backend.wofz_imag_line(-y, xs.ravel()).reshape(ms.shape)
    signs = np.where(ms & 1, -1.0, 1.0)
    return -signs * imw * scale


def amplitude_envelope(state: IntelligentState) -> float:
    """K such that |c_m| <= K/m**2 for every m != 0 (lam < 0 only).

    Two integrations by parts of the cosine transform give
    K = [2*a*pi + (a + a**2*pi**2)*J] / sqrt(2*pi*G) with a = |lambda|,
    J the half-exponent scaled norm and G the full scaled norm; both are
    finite for every a, so the bound never overflows.
    """
    if state.lam >= 0.0:
        raise ValueError("the quadratic envelope applies to lam < 0")
    a = -state.lam
    s = 0.5 * a
    g = _scaled_norm(a)
    g_half = math.sqrt(PI / s) * backend.erfi_scaled_real(math.sqrt(s) * PI)
    prefac = 1.0 / math.sqrt(TWO_PI * g)
    return prefac * (4.0 * s * PI + (2.0 * s + 4.0 * s * s * PI * PI) * g_half)


def oam_distribution(lam: float, epsilon: float) -> AngularDistribution:
    """Angular-momentum distribution truncated so the probability tail is
    below epsilon.

    Parameters
    ----------
    lam : float
        Family parameter, lam <= 0 (positive lam has no quadratic-envelope
        tail control).
    epsilon : float
        Tail budget, 0 < epsilon < 1; m_max is the smallest cut with
        2*K**2/(3*m_max**3) < epsilon under the envelope |c_m| <= K/m**2.
    """
    lam = float(lam)
    if not 0.0 < epsilon < 1.0:
        raise ValueError("epsilon must lie in (0, 1)")
    if lam > 0.0:
        raise ValueError("oam_distribution requires lam <= 0")
    state = make_state(lam)
    if lam == 0.0:
        m_max = 8
        amplitudes = np.zeros(2 * m_max + 1)
        amplitudes[m_max] = 1.0
        return AngularDistribution(lam=0.0, m_max=m_max,
                                   amplitudes=amplitudes, tail_bound=0.0,
                                   envelope=0.0)
    envelope = amplitude_envelope(state)
    a = -lam
    m_max = max(
        math.ceil((2.0 * envelope**2 / (3.0 * epsilon)) ** (1.0 / 3.0)),
        math.ceil(4.0 * a * PI),
        8,
    )
    ms = np.arange(-m_max, m_max + 1)
    amplitudes = oam_amplitudes(state, ms)
    tail_bound = 2.0 * envelope**2 / (3.0 * m_max**3)
    return AngularDistribution(lam=lam, m_max=m_max, amplitudes=amplitudes,
                               tail_bound=tail_bound, envelope=envelope)


def hermiticity_defect(lam: float) -> HermiticityReport:
    """Quantify the boundary obstruction to -i d/dphi acting symmetrically.

    For the edge-growing states, <psi|(-psi'')> and <psi'|psi'> differ by
    the boundary flux -2|lambda|*pi*P(pi): the window edge carries real
    probability density, so integrating by parts is not free.  Both sides
    are evaluated by quadrature and the boundary term analytically.
    """
    lam = float(lam)
    if lam >= 0.0:
        raise ValueError("hermiticity_defect illustrates the lam < 0 regime")
    a = -lam
    norm = quad.norm_scaled(a)
    moment = quad.moment_scaled(a)
    mean_sq = moment.value / norm.value
    lhs = -a - a * a * mean_sq
    rhs = a * a * mean_sq
    boundary = -2.0 * a * PI * make_state(lam).boundary_density
    return HermiticityReport(lam=lam, lhs=lhs, rhs=rhs, boundary_term=boundary)
