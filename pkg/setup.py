"""Build hook for the optional compiled kernel.

The package works without it: ``qlattice.kernels`` falls back to the
pure-Python implementation when ``_ckernels`` cannot be imported.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("qlattice._ckernels", ["src/qlattice/_ckernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": 3},
        quiet=True,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
