from setuptools import setup, Extension

# The compiled kernel is optional: the package falls back to pure
# numpy implementations when the extension is missing.
try:
    from Cython.Build import cythonize
    import numpy as np

    ext_modules = cythonize(
        [
            Extension(
                "hopfbrace._fpcore",
                ["src/hopfbrace/_fpcore.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
