"""Build script for the optional compiled kernel core.

The package works without the extension (a numpy fallback is selected at
import time); set METADIFF_SKIP_EXT=1 to skip compilation entirely.
"""

import os

import numpy as np
from setuptools import Extension, setup

ext_modules = []
if os.environ.get("METADIFF_SKIP_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "metadiff._kernels._core",
                ["src/metadiff/_kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
