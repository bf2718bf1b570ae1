"""Backend selection.

The compiled extension is preferred when importable; the pure numpy fallback
is used otherwise, or when the environment variable ``INTANGLE_PURE`` is set
to anything but ``0``.  Both backends expose the same five kernels with the
same algorithms, so results agree to rounding.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("INTANGLE_PURE", "0") not in ("", "0"):
    _impl = _fallback
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

BACKEND_NAME: str = _impl.BACKEND_NAME

erf_real = _impl.erf_real
erfi_scaled_real = _impl.erfi_scaled_real
wofz_point = _impl.wofz_point
wofz_imag_line = _impl.wofz_imag_line
gk_kind = _impl.gk_kind

# The generic engine takes a Python callable, which a compiled loop cannot
# speed up, so it always comes from the fallback module.
adaptive_generic = _fallback.adaptive_generic
oscillation_seeds = _fallback.oscillation_seeds


def backend_name() -> str:
    """Name of the active computational backend ("core" or "fallback")."""
    return BACKEND_NAME
