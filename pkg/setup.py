#!/usr/bin/env python3

from setuptools import find_packages, setup

from vlimits import version_info

VLIMITS_VERSION = version_info.get_vlimits_version()

setup(
    name="vlimits",
    version=VLIMITS_VERSION,
    packages=find_packages(exclude=["tests", "tests.*"]),
    description="Stable limits of line bundles on nodal curves, computed exactly",
    long_description=(
        "A library and command line tool that computes the combinatorial and toric description"
        " of the limits of line bundles on a degenerating family of curves from the dual graph"
        " of the special fiber: chip-firing on subdivided graphs, slope cochains, mixed Voronoi"
        " tilings and the cell complex of the limit locus."
    ),
    license="GPL-2.0+",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License (GPL)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3.13",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={"console_scripts": ["vlimits = vlimits.main:run"]},
    python_requires=">=3.10",
    install_requires=[
        "networkx>=2.6",
        "Pillow>=3.4",
        "ply>=3.11",
        "sympy>=1.9",
    ],
    extras_require={"test": ["pytest"]},
)
