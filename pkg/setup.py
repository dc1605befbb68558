#!/usr/bin/env python3
"""Setup script for ordchange"""

from pathlib import Path

from setuptools import find_packages, setup

ROOT = Path(__file__).parent


def read_requirements(name):
    """Requirement lines of a requirements file, comments dropped"""
    lines = (ROOT / name).read_text().splitlines()
    return [line.strip() for line in lines if line.strip() and not line.startswith("#")]


optional = read_requirements("requirements-optional.txt")

setup(
    name="ordchange",
    version="1.0.0",
    description="Change-point detection with the conditional entropy of ordinal patterns",
    long_description=(ROOT / "README.md").read_text(),
    long_description_content_type="text/markdown",
    packages=find_packages(include=["ordchange", "ordchange.*"]),
    python_requires=">=3.9",
    install_requires=read_requirements("requirements-core.txt"),
    extras_require={
        "service": [r for r in optional if not r.startswith("httpx")],
        "test": optional,
    },
    entry_points={
        "console_scripts": ["ordchange = ordchange.cli:main"],
    },
    license="MIT",
)
