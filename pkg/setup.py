"""Build script: compiles the optional exact-simplex kernel.

The package works without the extension (a pure-Python twin is selected
at import time), so any Cython or compiler failure downgrades to a
pure-Python install instead of aborting.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("tverlab.kernels._speed", ["src/tverlab/kernels/_speed.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on toolchain
    print(f"warning: building without compiled kernel ({exc})")

setup(ext_modules=ext_modules)
