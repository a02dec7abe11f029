"""Build hook for the optional compiled matching kernel.

The package is fully functional without the extension: framecxn.kernel
falls back to the pure-Python implementation at import time.  Set
FRAMECXN_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("FRAMECXN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/framecxn/kernel/_native.pyx"],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
