import os

from setuptools import setup

ext_modules = []
if not os.environ.get("TREEPROOF_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/treeproof/prover/_satcore.pyx"], language_level=3
        )
    except ImportError:
        # Pure-Python fallback kernel is selected at import time.
        pass

setup(ext_modules=ext_modules)
