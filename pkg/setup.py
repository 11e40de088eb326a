import os

from setuptools import Extension, setup

# The compiled kernel is an optimization, not a requirement: the package
# falls back to the pure-Python kernel at import time if the extension is
# missing.  Set MONOMOD_PURE=1 to skip compilation entirely.
ext_modules = []
if not os.environ.get("MONOMOD_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("monomod._corec", ["src/monomod/_corec.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
