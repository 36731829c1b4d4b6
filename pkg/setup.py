from setuptools import Extension, setup

import numpy as np
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "keygraph._kernels",
                sources=["src/keygraph/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    ),
)
