"""Timing comparison between the compiled core and the pure-Python fallback.

Runs three workloads through both engines in-process (the generic adaptive
integrator is shared, so only the kernels and the specialized kinds differ)
and prints a small table.  Usage: python benchmarks/bench_backends.py
"""

import math
import time

import numpy as np

from intangle import _fallback

try:
    from intangle import _core
except ImportError:
    _core = None

PI = math.pi


def time_call(fn, *args, repeats=5):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def scaled_erfi_sweep(mod):
    xs = np.linspace(0.05, 30.0, 20000)
    def run():
        total = 0.0
        for x in xs:
            total += mod.erfi_scaled_real(float(x))
        return total
    return run


def wofz_batch(mod):
    zi = np.linspace(0.0, 2000.0, 400000)
    def run():
        return mod.wofz_imag_line(-1.2533, zi)
    return run


def fourier_sweep(mod):
    def run():
        total = 0.0
        for m in range(1, 400):
            v, _, _, _ = mod.gk_kind(5, 1.0, float(m), 0.0, PI, 1e-11, 10**6)
            total += v
        return total
    return run


def main():
    jobs = [
        ("erfi_scaled x20000", scaled_erfi_sweep),
        ("wofz line x400000", wofz_batch),
        ("fourier kind5 m<400", fourier_sweep),
    ]
    mods = [("fallback", _fallback)]
    if _core is not None:
        mods.append(("core", _core))
    print(f"{'workload':<24}" + "".join(f"{name:>12}" for name, _ in mods)
          + ("       ratio" if _core else ""))
    for label, factory in jobs:
        times = [time_call(factory(mod)) for _, mod in mods]
        row = f"{label:<24}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
