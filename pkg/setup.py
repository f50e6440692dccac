"""canonstrip setup.py"""

import re
from codecs import open
from os import path

from setuptools import find_packages, setup

PACKAGE_NAME = "canonstrip"
HERE = path.abspath(path.dirname(__file__))
with open(path.join(HERE, "README.rst"), encoding="utf-8") as fp:
    README = fp.read()
with open(path.join(HERE, PACKAGE_NAME, "const.py"), encoding="utf-8") as fp:
    VERSION = re.search('__version__ = "([^"]+)"', fp.read()).group(1)

extras = {
    "ci": ["coveralls"],
    "dev": ["packaging"],
    "lint": [
        "pre-commit",
        "sphinx",
        "sphinx_rtd_theme",
    ],
    "readthedocs": ["sphinx", "sphinx_rtd_theme"],
    "test": [
        "hypothesis >=6",
        "mock >=4.0",
        "pytest >=6",
        "pytest-asyncio >=0.17",
        "testfixtures >4.13.2, <7",
    ],
}
extras["dev"] += extras["lint"] + extras["test"]

setup(
    name=PACKAGE_NAME,
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description=(
        "canonstrip decides with exact rational arithmetic whether the zeros of"
        " Hilbert and Ehrhart polynomials lie in the canonical strip or on the"
        " canonical line."
    ),
    entry_points={"console_scripts": ["canonstrip = canonstrip.cli:main"]},
    extras_require=extras,
    install_requires=[
        "aiofiles <=0.8.0",
        "asyncio_extras <=1.3.2",
        "matplotlib >=3.3",
        "numpy >=1.20",
        "sympy >=1.8",
    ],
    keywords="hilbert polynomial ehrhart polynomial fano canonical strip sturm",
    license="Simplified BSD License",
    long_description=README,
    package_data={
        "": ["LICENSE.txt"],
        PACKAGE_NAME: ["*.ini", "ehrhart/data/*.json", "ehrhart/data/*.rst"],
    },
    packages=find_packages(exclude=["tests", "tests.*"]),
    version=VERSION,
)
