"""Build script: compiles the optional bitset kernel.

The package is pure Python plus one accelerator module.  When Cython or a
C compiler is unavailable (or GRANUDESC_NO_EXT is set), the install
proceeds without the extension and the portable kernel is used.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GRANUDESC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "granudesc._kernel._fast",
                    sources=["src/granudesc/_kernel/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
