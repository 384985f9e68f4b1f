"""Build script: compiles the optional fast scan kernel when Cython is available.

The package works without the extension; swapdisc._kernels falls back to the
pure-Python kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/swapdisc/_kernels/_fast.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
