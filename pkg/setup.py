"""
Setup configuration for the Graph-Product Toolkit
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="graph-product-toolkit",
    version="1.0.0",
    description="Normal forms, parabolic subgroups, cube complexes and classification verdicts for graph products",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Operating System :: OS Independent",
    ],
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["graphprod_cli"],
    python_requires=">=3.9",
    install_requires=[
        "networkx>=3.1",
        "numpy>=1.24.0",
        "pandas>=2.0.0",
        "plotly>=5.15.0",
        "matplotlib>=3.7.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
            "black>=23.7.0",
            "flake8>=6.0.0",
            "mypy>=1.5.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "graphprod=graphprod_cli:main",
        ],
    },
    keywords=[
        "graph products",
        "right-angled Artin groups",
        "normal forms",
        "parabolic subgroups",
        "cube complexes",
        "group theory",
    ],
)
