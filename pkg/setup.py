"""Optional build of the compiled kernel extension.

The package is fully functional without it; apavoid._backend falls back to
the pure-Python kernels when the extension is absent or APAVOID_PURE is set.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("APAVOID_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/apavoid/_speedups.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
