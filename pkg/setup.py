"""Build hook for the optional compiled closure kernel.

The package is pure Python plus one small Cython extension used by the
numerical-monoid canonicalizer. If Cython (or a C compiler) is missing the
build falls back to the pure kernel; nothing else changes.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/semideal/_kernels/_closure.pyx"],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
