"""Build script: compiles the optional polynomial kernel.

The compiled extension is a pure speed-up; btlab falls back to the
pure-Python kernel at import time when the extension is missing, so a
failed compile must never abort the install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building the btlab._poly_kernel extension failed ({exc}); "
            "the pure-Python kernel will be used instead",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not available; skipping the compiled polynomial kernel",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [Extension("btlab._poly_kernel", ["src/btlab/_poly_kernel.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
