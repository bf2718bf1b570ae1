"""Build script: compiles the accelerated kernel extension when Cython is available.

Set INTANGLE_NO_EXT=1 to skip the extension and install the pure-Python
package only (the numpy fallback backend is selected at import time).
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("INTANGLE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/intangle/_core.pyx"],
            language_level=3,
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
        for ext in ext_modules:
            ext.extra_compile_args = ["-O3"]
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
