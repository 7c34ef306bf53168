"""Build script: compiles the optional packed-word elimination core.

The package works without the extension (a pure-Python fallback is
selected at import time); set TRILIGHTS_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("TRILIGHTS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "trilights._gf2core",
                    ["src/trilights/_gf2core.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
