"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a blocked-numpy
fallback is selected at import time), so the build is marked optional and
failures are non-fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "yulesimon._kernels",
                ["src/yulesimon/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
