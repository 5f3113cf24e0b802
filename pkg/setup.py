"""Build the optional Cython staircase kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("REESFIBER_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/reesfiber/oracle/_kernels.pyx"],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
