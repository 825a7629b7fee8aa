from setuptools import Extension, setup
from Cython.Build import cythonize
import numpy as np

ext = Extension(
    "warmgray._kernels",
    ["src/warmgray/_kernels.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3"],
)

setup(ext_modules=cythonize([ext], language_level=3))
