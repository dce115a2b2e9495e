import os

from setuptools import setup

ext_modules = []
if os.environ.get("MATCHROOTS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "matchroots._kernels_c",
                    ["src/matchroots/_kernels_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: the pure-Python kernels are picked up at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
