import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LOXGROW_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "loxgrow.growth._kernel",
                    ["src/loxgrow/growth/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        # the package runs on the pure-Python engine without the extension
        ext_modules = []

setup(ext_modules=ext_modules)
