"""Build script: compiles the optional fast kernels.

The package works without the extension (a pure-Python fallback is selected at
import time); set LTTCHECK_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LTTCHECK_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lttcheck._speedups", ["src/lttcheck/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
