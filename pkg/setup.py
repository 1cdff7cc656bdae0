import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("MICROSTAR_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("microstar._ckernel", ["src/microstar/_ckernel.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython: install the pure-Python package, kernel.py falls back.
        ext_modules = []

setup(ext_modules=ext_modules)
