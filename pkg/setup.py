from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ringlab/_ckern.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    # The compiled kernels are an optional speedup; the package runs on the
    # pure-Python backend when they are absent.
    ext_modules = []

setup(ext_modules=ext_modules)
