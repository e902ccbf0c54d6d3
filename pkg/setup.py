"""Build script: compiles the kernel core when Cython is available.

The package works without the extension (the pure-Python kernels are
selected at import), so the build degrades gracefully instead of failing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("lgroup._kernels._core", ["src/lgroup/_kernels/_core.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
