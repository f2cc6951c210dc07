"""Build script: compiles the optional Cython kernel extension.

The package is pure Python plus one optional extension module,
``fracsl._kernels._core``.  When Cython or a C compiler is missing the
build silently degrades to the NumPy backend; every public interface
behaves identically either way (see ``fracsl._kernels``).
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext = Extension(
        "fracsl._kernels._core",
        sources=["src/fracsl/_kernels/_core.pyx"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level="3")
except ImportError:
    pass

setup(ext_modules=ext_modules)
