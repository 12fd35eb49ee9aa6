# Builds the compiled refinement kernel.  The package works without it
# (arcschemes._refine_py is the fallback), so a missing compiler or a
# missing Cython only costs speed, never functionality.
#
#   python setup.py build_ext --inplace    # manual in-tree build

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "arcschemes._refine_cy",
                ["src/arcschemes/_refine_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
