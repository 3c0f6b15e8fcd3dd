"""Build script: compiles the optional search-kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a missing/broken Cython toolchain downgrades
to a warning instead of failing the install.
"""
import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "ringrange._kernels._speedups",
                ["src/ringrange/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - toolchain dependent
    warnings.warn(f"building without compiled kernels ({exc}); pure fallback will be used")

setup(ext_modules=ext_modules)
