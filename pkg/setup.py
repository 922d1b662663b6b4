"""Builds the optional compiled simulation kernel.

The package is fully functional without it: revlogic.engine falls back to a
numpy implementation when the extension is absent (or when REVLOGIC_FORCE_PY
is set). Build in place with `python setup.py build_ext --inplace` or just
`pip install -e . --no-build-isolation`.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("revlogic._kernels", ["src/revlogic/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
