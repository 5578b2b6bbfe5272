"""Builds the optional Cython kernel extension.

The package works without it: gridwalk._kernels falls back to the pure-Python
implementations when the compiled module is absent. Set GRIDWALK_NO_EXT=1 to
skip the extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GRIDWALK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gridwalk._kernels._core",
                    ["src/gridwalk/_kernels/_core.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
