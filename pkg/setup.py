"""Build script for the optional compiled convolution kernel.

The package works without the extension (a pure numpy backend is selected at
import time), so a failed compile only costs speed.  Build with
``pip install -e . --no-build-isolation``.
"""

import numpy
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"seqinv: skipping compiled kernel ({exc}); using pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"seqinv: failed to build {ext.name} ({exc}); using pure-Python backend")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "seqinv._ntt",
                ["src/seqinv/_ntt.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
