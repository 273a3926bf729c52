from setuptools import setup, Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("rdom._kernels", ["src/rdom/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython: install pure-Python only, rdom.kernels falls back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
