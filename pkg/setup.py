"""Build the optional Cython kernels; the package falls back to pure Python without them."""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Never fail the install because a compiler or Cython is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on the toolchain
            warnings.warn(f"compiled kernels not built ({exc}); using the Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            warnings.warn(f"could not build {ext.name} ({exc}); using the Python fallback")


def ext_modules():
    if os.environ.get("SEIDS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("seids._kernels", ["src/seids/_kernels.pyx"], extra_compile_args=["-O2"])
    return cythonize([ext], compiler_directives={"language_level": 3})


setup(ext_modules=ext_modules(), cmdclass={"build_ext": OptionalBuildExt})
