"""Build hook for the optional compiled kernel.

The extension is an accelerator only: when Cython or a C compiler is
unavailable the build proceeds without it and the package runs on the
pure-Python kernel.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("filterpaths._kernel", ["src/filterpaths/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
