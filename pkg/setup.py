"""Setup script for the ZAMO Knowledge Graph Toolkit."""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="zamo-toolkit",
    version="1.0.0",
    author="ZAMO Toolkit Team",
    description="In-memory knowledge-graph engine and SAMOD harness for the Zeri Art Market Ontology",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["src", "src.*"]),
    package_data={
        "src.ontology": ["data/*.ttl"],
        "src.alignment": ["data/*.ttl"],
        "src.samod": ["templates/*.j2"],
    },
    include_package_data=True,
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Information Analysis",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.10",
    install_requires=requirements,
    extras_require={
        "dev": [
            "pytest>=7.4.3",
            "pytest-cov>=4.1.0",
            "rdflib>=7.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "zamo=src.main:main",
        ],
    },
)
