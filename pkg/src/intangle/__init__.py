"""Uncertainty equality for angle and angular momentum on the circle.

Intelligent states (Gaussian-on-the-window wavefunctions) saturate the
Robertson-Schroedinger relation for the periodic angle operator and the
angular-momentum operator.  This package evaluates their uncertainty
reports in closed form, cross-checks everything against adaptive
quadrature, expands the states over angular-momentum eigenstates, embeds
them in finite-dimensional angle spaces, and exposes the perturbative,
wavefunction, and Lorentzian approximation regimes, all behind a CLI.
"""

__version__ = "0.1.0"

from .backend import backend_name
from .continuum import (
    AngularDistribution,
    HermiticityReport,
    IntelligentState,
    UncertaintyReport,
    hermiticity_defect,
    make_state,
    oam_amplitude,
    oam_amplitudes,
    oam_distribution,
    report,
    wavefunction,
)
from .finite_dim import (
    FiniteSpace,
    FiniteState,
    RsReport,
    angle_eigenstate,
    angle_operator,
    commutator,
    embed_intelligent,
    lz_operator,
    rs_report,
)
from .approx import (
    closed_sums,
    lorentzian_report,
    perturbative_report,
    perturbative_state,
    wavefunction_report,
)
from .quad import QuadratureError, QuadratureResult, integrate, integrate_endpoint_peaked
from .specfun import CancellationError, ScaledErfiValue, erf_real, erfi, hyperbolics, im_erf_complex

__all__ = [
    "__version__",
    "backend_name",
    "AngularDistribution",
    "HermiticityReport",
    "IntelligentState",
    "UncertaintyReport",
    "hermiticity_defect",
    "make_state",
    "oam_amplitude",
    "oam_amplitudes",
    "oam_distribution",
    "report",
    "wavefunction",
    "FiniteSpace",
    "FiniteState",
    "RsReport",
    "angle_eigenstate",
    "angle_operator",
    "commutator",
    "embed_intelligent",
    "lz_operator",
    "rs_report",
    "closed_sums",
    "lorentzian_report",
    "perturbative_report",
    "perturbative_state",
    "wavefunction_report",
    "QuadratureError",
    "QuadratureResult",
    "integrate",
    "integrate_endpoint_peaked",
    "CancellationError",
    "ScaledErfiValue",
    "erf_real",
    "erfi",
    "hyperbolics",
    "im_erf_complex",
]
