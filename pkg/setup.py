import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "hueseg._kernels",
                ["src/hueseg/_kernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
else:
    # Pure-python fallback in hueseg._kernels_py keeps the package usable
    # without a compiler; see hueseg.backend.
    ext_modules = []

setup(ext_modules=ext_modules)
