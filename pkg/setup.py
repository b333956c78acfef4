import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("POLYWEIGHT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "polyweight._kernels._fast",
                    ["src/polyweight/_kernels/_fast.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install the pure-Python package only.
        ext_modules = []

setup(ext_modules=ext_modules)
