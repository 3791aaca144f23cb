import os

import numpy as np
from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or with SYMDEFECT_NO_EXT=1)
# the package installs and runs on the pure-Python fallback.
extensions = []
if not os.environ.get("SYMDEFECT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        extensions = cythonize(
            [
                Extension(
                    "symdefect._ckernels",
                    ["src/symdefect/_ckernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=extensions)
