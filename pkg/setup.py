#!/usr/bin/env python3
"""
Setup script for PyRSC - Random Simplicial Complexes in Python
"""

import os
import sys
from setuptools import setup, find_packages

# Ensure we're running on Python 3.11+
if sys.version_info < (3, 11):
    sys.exit("PyRSC requires Python 3.11 or higher")


# Read the long description from README
def read_readme():
    readme_path = os.path.join(os.path.dirname(__file__), "README.md")
    try:
        with open(readme_path, "r", encoding="utf-8") as f:
            return f.read()
    except FileNotFoundError:
        return "Random simplicial complexes: sampling, cohomology and threshold experiments"


# Read version from package
def get_version():
    version_file = os.path.join(os.path.dirname(__file__), "pyrsc", "__init__.py")
    with open(version_file, "r", encoding="utf-8") as f:
        for line in f:
            if line.startswith("__version__"):
                return line.split("=")[1].strip().strip("\"'")
    return "0.1.0"


setup(
    name="pyrsc",
    version=get_version(),
    author="mssc89",
    author_email="pyrsc@example.com",
    description="Random simplicial complexes: sampling, cohomology and threshold experiments",
    long_description=read_readme(),
    long_description_content_type="text/markdown",
    url="https://github.com/mssc89/pyrsc",
    project_urls={
        "Bug Tracker": "https://github.com/mssc89/pyrsc/issues",
        "Documentation": "https://github.com/mssc89/pyrsc#readme",
        "Source Code": "https://github.com/mssc89/pyrsc",
    },
    packages=find_packages(include=["pyrsc", "pyrsc.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    keywords=[
        "topology",
        "simplicial-complex",
        "random-complex",
        "cohomology",
        "cup-product",
        "steenrod-squares",
        "collapse",
        "monte-carlo",
        "stochastic-topology",
    ],
    python_requires=">=3.11",
    install_requires=[
        "flatbuffers>=24.3.25",
        "numpy>=1.24",
        "sympy>=1.13",
        "networkx>=3.0",
        "matplotlib>=3.7",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0",
            "pytest-cov>=2.0",
            "black>=21.0",
            "flake8>=3.8",
            "mypy>=0.900",
        ],
    },
    entry_points={
        "console_scripts": [
            "pyrsc=pyrsc.cli:main",
        ],
    },
    package_data={
        "pyrsc": ["py.typed", "data/*.cplx"],
    },
    include_package_data=True,
    zip_safe=False,
)
