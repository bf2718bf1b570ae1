"""Pure numpy computational backend.

Mirrors the API of the compiled extension ``intangle._core`` and is selected
by :mod:`intangle.backend` when the extension is unavailable or when
``INTANGLE_PURE=1`` is set.  Everything here is deterministic: same inputs,
same bits, no global state.
"""

from __future__ import annotations

import math

import numpy as np

from ._tables import (
    GL15_NODES,
    GL15_WEIGHTS,
    SPLITTER,
    WEIDEMAN_COEFFS,
    WEIDEMAN_L,
    WOFZ_CF_DEPTH,
    WOFZ_SEAM,
)

BACKEND_NAME = "fallback"

_EPS = float(np.finfo(float).eps)
_TWO_PI = 2.0 * math.pi
_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)

# Interval width below which subdivision stops unconditionally; all engine
# domains are O(pi) long, so this is ~40 bisections deep.
_MIN_WIDTH = 1e-13


# ---------------------------------------------------------------------------
# Faddeeva function w(z) = exp(-z^2) erfc(-iz), closed upper half plane.

def _wofz_weideman(z: np.ndarray) -> np.ndarray:
    """Rational approximation of w(z), accurate near the origin (|z| < 16)."""
    iz = 1j * z
    d = WEIDEMAN_L - iz
    zz = (WEIDEMAN_L + iz) / d
    p = np.polyval(WEIDEMAN_COEFFS, zz)
    return 2.0 * p / (d * d) + _INV_SQRT_PI / d


def _wofz_cf(z: np.ndarray) -> np.ndarray:
    """Laplace continued fraction for w(z), accurate for |z| >= 16."""
    t = np.zeros_like(z)
    for k in range(WOFZ_CF_DEPTH, 0, -1):
        t = (0.5 * k) / (z - t)
    return (1j * _INV_SQRT_PI) / (z - t)


def wofz_point(zr: float, zi: float) -> complex:
    """w(zr + i*zi) for a single point with zi >= 0."""
    z = np.complex128(complex(zr, zi))
    if abs(z) >= WOFZ_SEAM:
        return complex(_wofz_cf(z))
    return complex(_wofz_weideman(z))


def wofz_imag_line(zr: float, zi) -> np.ndarray:
    """Im w(zr + i*zi) for an array of ordinates zi >= 0 at fixed abscissa."""
    z = zr + 1j * np.asarray(zi, dtype=float)
    out = np.empty(z.shape, dtype=float)
    near = np.abs(z) < WOFZ_SEAM
    if near.any():
        out[near] = _wofz_weideman(z[near]).imag
    far = ~near
    if far.any():
        out[far] = _wofz_cf(z[far]).imag
    return out


# ---------------------------------------------------------------------------
# Real error function and scaled imaginary error function.

def erf_real(x: float) -> float:
    """erf(x) for real x: Maclaurin series up to |x| = 2, Faddeeva beyond."""
    ax = abs(x)
    if ax <= 2.0:
        s = term = ax
        x2 = ax * ax
        k = 0
        while True:
            k += 1
            term *= -x2 / k
            s += term / (2 * k + 1)
            if abs(term) / (2 * k + 1) <= 1e-18 * abs(s) or k > 80:
                break
        val = (2.0 / math.sqrt(math.pi)) * s
    elif ax >= 6.5:
        # 1 - erf(6.5) ~ 3e-20, below one ulp of 1.0
        val = 1.0
    else:
        val = 1.0 - math.exp(-ax * ax) * wofz_point(0.0, ax).real
    return math.copysign(val, x)


def erfi_scaled_real(x: float) -> float:
    """exp(-x^2)*erfi(x): Maclaurin up to |x| = 6, asymptotic series beyond.

    Both regimes are free of cancellation (all-positive terms on one side,
    a term-magnitude-decreasing divergent series truncated at its smallest
    term on the other); the seam at 6 keeps the asymptotic truncation error
    below 4e-16.
    """
    ax = abs(x)
    if ax == 0.0:
        return 0.0
    if ax <= 6.0:
        s = term = ax
        x2 = ax * ax
        k = 0
        while True:
            k += 1
            term *= x2 / k
            s += term / (2 * k + 1)
            if term <= 1e-17 * s * (2 * k + 1) or k > 160:
                break
        val = (2.0 / math.sqrt(math.pi)) * s * math.exp(-x2)
    else:
        inv2x2 = 1.0 / (2.0 * ax * ax)
        s = term = 1.0
        k = 0
        while True:
            k += 1
            nt = term * (2 * k - 1) * inv2x2
            if nt >= term or term < 1e-18 * s:
                break
            term = nt
            s += term
            if k > 60:
                break
        val = s / (math.sqrt(math.pi) * ax)
    return math.copysign(val, x)


# ---------------------------------------------------------------------------
# Adaptive Gauss-Legendre subdivision engine.

def _gl15(evalf, lows, highs):
    """Vectorized 15-point Gauss-Legendre pass over a batch of intervals."""
    half = 0.5 * (highs - lows)
    mid = 0.5 * (highs + lows)
    xs = mid[:, None] + half[:, None] * GL15_NODES[None, :]
    fs = np.asarray(evalf(xs.ravel()), dtype=float).reshape(xs.shape)
    q = (fs * GL15_WEIGHTS).sum(axis=1) * half
    a = (np.abs(fs) * GL15_WEIGHTS).sum(axis=1) * half
    return q, a, xs.size


def adaptive_generic(evalf, lo: float, hi: float, tol: float,
                     max_evals: int, seeds=None):
    """Adaptively integrate a vectorized integrand over [lo, hi].

    Each interval's error is estimated as the discrepancy between its
    15-point quadrature and the sum over its two halves.  Intervals whose
    discrepancy fits a width-proportional share of the global goal, or
    whose children already differ only at roundoff level relative to the
    integral of |f|, are frozen into a compensated accumulator; the rest
    are split again.

    Returns ``(value, error_bound, evaluations, status)`` where status is
    0 on success and 1 when the evaluation budget ran out.
    """
    if seeds is None:
        seeds = np.array([lo, hi], dtype=float)
    act_lo = np.asarray(seeds[:-1], dtype=float)
    act_hi = np.asarray(seeds[1:], dtype=float)
    act_q, _, nev = _gl15(evalf, act_lo, act_hi)
    goal = max(tol, tol * abs(float(act_q.sum())))
    span = hi - lo
    tot = 0.0
    comp = 0.0  # Neumaier compensation for the frozen sum
    tot_err = 0.0
    while act_lo.size:
        mids = 0.5 * (act_lo + act_hi)
        clo = np.concatenate([act_lo, mids])
        chi = np.concatenate([mids, act_hi])
        q, a, n_new = _gl15(evalf, clo, chi)
        nev += n_new
        if nev > max_evals:
            return tot + comp, math.inf, nev, 1
        n = act_lo.size
        qsum = q[:n] + q[n:]
        asum = a[:n] + a[n:]
        err = np.abs(act_q - qsum)
        budget = 0.5 * goal * (act_hi - act_lo) / span
        freeze = (err <= np.maximum(budget, 30 * _EPS * asum)) | (
            (act_hi - act_lo) < _MIN_WIDTH
        )
        for v in qsum[freeze]:
            t = tot + v
            comp += (tot - t + v) if abs(tot) >= abs(v) else (v - t + tot)
            tot = t
        tot_err += float(err[freeze].sum())
        keep = ~freeze
        act_lo = np.concatenate([act_lo[keep], mids[keep]])
        act_hi = np.concatenate([mids[keep], act_hi[keep]])
        act_q = np.concatenate([q[:n][keep], q[n:][keep]])
    return tot + comp, tot_err, nev, 0


# ---------------------------------------------------------------------------
# The four specialized integrand kinds used by the closed-form oracles.
#
#   kind 1: exp(-p1*u*(2pi - u)) * cos(p2*u)
#   kind 2: (pi - u)^2 * exp(-p1*u*(2pi - u))
#   kind 3: exp(-p1*u^2) * cos(p2*u)
#   kind 4: u^2 * exp(-p1*u^2)

def _cos_compensated(m: float, u: np.ndarray) -> np.ndarray:
    # cos(m*u) with the product rounding corrected via a Dekker split;
    # the split is exact for integer m below 2**27.
    p = m * u
    t = SPLITTER * u
    uh = t - (t - u)
    ul = u - uh
    e = (m * uh - p) + m * ul
    return np.cos(p) - np.sin(p) * e


def _kind_evaluator(kind: int, p1: float, p2: float):
    if kind == 1:
        if p2 == 0.0:
            return lambda u: np.exp(-p1 * u * (_TWO_PI - u))
        return lambda u: np.exp(-p1 * u * (_TWO_PI - u)) * _cos_compensated(p2, u)
    if kind == 2:
        return lambda u: (math.pi - u) ** 2 * np.exp(-p1 * u * (_TWO_PI - u))
    if kind == 3:
        if p2 == 0.0:
            return lambda u: np.exp(-p1 * u * u)
        return lambda u: np.exp(-p1 * u * u) * _cos_compensated(p2, u)
    if kind == 4:
        return lambda u: u * u * np.exp(-p1 * u * u)
    if kind == 5:
        def second_derivative(u):
            width = _TWO_PI - 2.0 * u
            poly = 2.0 * p1 + p1 * p1 * width * width
            return poly * np.exp(-p1 * u * (_TWO_PI - u)) * _cos_compensated(p2, u)
        return second_derivative
    raise ValueError(f"unknown integrand kind {kind}")


def oscillation_seeds(lo: float, hi: float, freq: float) -> np.ndarray:
    """Uniform seed grid fine enough that one panel sees ~1.6 periods."""
    n0 = min(4096, max(1, int((hi - lo) * abs(freq) / 10.0) + 1))
    return np.linspace(lo, hi, n0 + 1)


def gk_kind(kind: int, p1: float, p2: float, lo: float, hi: float,
            tol: float, max_evals: int):
    """Adaptive integration of one of the specialized kinds over [lo, hi]."""
    seeds = oscillation_seeds(lo, hi, p2) if kind in (1, 3, 5) else None
    return adaptive_generic(_kind_evaluator(kind, p1, p2), lo, hi, tol,
                            max_evals, seeds)
