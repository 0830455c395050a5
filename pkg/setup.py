"""Build the optional compiled kernels.

The extension is optional: without Cython or a C compiler the package
installs as pure Python and ``nspairs._backend`` falls back at import.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("nspairs._ckernels", ["src/nspairs/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
