# The Cython kernel is optional: without a compiler the package still
# installs and the pure-Python search is used.
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("nashcheck._witness_kernel", ["src/nashcheck/_witness_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
