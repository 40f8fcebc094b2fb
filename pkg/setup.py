"""Build hook for the optional compiled scan kernel.

The package is pure Python except for fankit._scancore, a Cython kernel for
the lattice-point scan.  The extension is marked optional: if Cython or a C
compiler is missing the install still succeeds and the scanner falls back to
its Python backends at import time.

The metadata below duplicates pyproject.toml on purpose: old pip/setuptools
combinations install editable packages through ``setup.py develop``, which
never reads the [project] table, and would otherwise lose the src layout,
the entry point, and the package name.
"""

from setuptools import Extension, find_packages, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "fankit._scancore",
                ["src/fankit/_scancore.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(
    name="fankit",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    install_requires=["numpy>=1.24"],
    entry_points={"console_scripts": ["fankit = fankit.cli:main"]},
    ext_modules=ext_modules,
)
