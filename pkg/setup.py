"""Optional Cython build of the Laurent kernels; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CLUSTER_DEMAZURE_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/cluster_demazure/exactalg/_kernels.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
