"""Build hook: compiles the Cython polynomial kernels when Cython is available."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("AEGELFAND_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            ["src/aegelfand/exact/_kernels.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
