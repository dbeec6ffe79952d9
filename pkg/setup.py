import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ORBISURF_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("orbisurf._ckernels", ["src/orbisurf/_ckernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
