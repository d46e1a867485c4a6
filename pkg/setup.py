"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compilation only costs speed.
"""
import sys

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/circulant_lab/_kernels/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"warning: building without compiled kernels ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
