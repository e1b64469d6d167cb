from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the numpy
# implementation in twistalg.kernels when the extension is absent.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "twistalg._fastkernels",
                ["src/twistalg/_fastkernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
