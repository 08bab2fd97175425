"""Build script for the optional compiled eigensolver kernel.

The package is pure Python apart from ``eigenmotif._kernels``, a cyclic
Jacobi eigensolver.  When Cython (or a C compiler) is unavailable the
extension is skipped and the numpy fallback in ``_kernels_py`` is used at
runtime instead.  Set EIGENMOTIF_NO_EXT=1 to force a pure-Python install.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("EIGENMOTIF_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("eigenmotif._kernels", ["src/eigenmotif/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
