"""Build the optional compiled kernel; everything else is pure Python."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("AFFHECKE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("affhecke._kernel_c", ["src/affhecke/_kernel_c.pyx"])],
            compiler_directives={"language_level": 3},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
