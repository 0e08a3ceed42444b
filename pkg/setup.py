"""Build script for the optional compiled kernel core.

The package works without the extension (a NumPy fallback is selected at
import time); build it for the threaded per-point kernels:

    pip install -e . --no-build-isolation
    # or, in a source tree:
    python setup.py build_ext --inplace
"""

import os

from setuptools import Extension, setup

import numpy
from Cython.Build import cythonize

extra_compile_args = ["-O3", "-fopenmp"]
extra_link_args = ["-fopenmp"]
if os.environ.get("TOMOSCOPE_NO_OPENMP"):
    extra_compile_args = ["-O3"]
    extra_link_args = []

extensions = [
    Extension(
        "tomoscope._core",
        ["src/tomoscope/_core.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=extra_compile_args,
        extra_link_args=extra_link_args,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": 3},
    )
)
