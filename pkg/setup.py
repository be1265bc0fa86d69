import os

from setuptools import Extension, setup


def extensions():
    """Build the compiled kernel extension, or nothing if disabled/unavailable.

    The package works without the extension (a NumPy fallback is selected at
    import time), so a missing compiler or DELTAVOX_NO_EXT=1 must not break
    installation.
    """
    if os.environ.get("DELTAVOX_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "deltavox._ckernels",
        ["src/deltavox/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
