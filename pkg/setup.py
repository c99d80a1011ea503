"""Build script: compiles the optional Cython speedups module.

The package works without the extension (a pure-Python kernel is selected at
import time), so any build failure here degrades gracefully to a pure install.
Set FROBFORGE_PURE_PYTHON=1 to skip the extension entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("FROBFORGE_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("frobforge._speedups", ["src/frobforge/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
