"""Shared numeric tables used by both computational backends.

Everything here is deterministic and cheap to build at import time, so the
tables are computed rather than hard-coded.  The compiled extension copies
them into static C arrays when it loads.
"""

import math

import numpy as np

__all__ = [
    "GL15_NODES",
    "GL15_WEIGHTS",
    "WEIDEMAN_N",
    "WEIDEMAN_L",
    "WEIDEMAN_COEFFS",
    "WOFZ_SEAM",
    "WOFZ_CF_DEPTH",
    "SPLITTER",
]

# 15-point Gauss-Legendre rule on [-1, 1]; the subdivision engine estimates
# per-interval error from the parent-minus-children discrepancy, so no
# embedded higher-order rule is needed.
GL15_NODES, GL15_WEIGHTS = np.polynomial.legendre.leggauss(15)
GL15_NODES.setflags(write=False)
GL15_WEIGHTS.setflags(write=False)

# Rational-approximation degree for the Faddeeva function w(z) on the disc
# |z| < WOFZ_SEAM, and the continued-fraction depth used outside it.
WEIDEMAN_N = 42
WOFZ_SEAM = 16.0
WOFZ_CF_DEPTH = 24

# Dekker splitting constant for exact double-double products (2**27 + 1).
SPLITTER = 134217729.0


def _weideman_coefficients(n):
    """Polynomial coefficients (highest order first) of the degree-n rational
    approximation to w(z) on the upper half plane, built by trapezoidal FFT."""
    m = 2 * n
    big_l = math.sqrt(n / math.sqrt(2.0))
    theta = (np.arange(-m + 1, m) * math.pi) / m
    t = big_l * np.tan(theta / 2.0)
    f = np.exp(-t * t) * (big_l * big_l + t * t)
    f = np.concatenate(([0.0], f))
    a = np.fft.fft(np.fft.fftshift(f)).real / (2 * m)
    return big_l, a[1 : n + 1][::-1].copy()


WEIDEMAN_L, WEIDEMAN_COEFFS = _weideman_coefficients(WEIDEMAN_N)
WEIDEMAN_COEFFS.setflags(write=False)
