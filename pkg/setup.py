"""
Setup script for etabench
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

with open("test_requirements.txt", "r", encoding="utf-8") as fh:
    test_requirements = [line.strip() for line in fh if line.strip()]

setup(
    name="etabench",
    version="1.0.0",
    author="etabench",
    description="Dependent type checker comparing syntax-directed and type-directed conversion checking",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="type theory, normalization by evaluation, conversion checking, eta, benchmarks",
    packages=find_packages(exclude=["tests"]),
    py_modules=["main"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.11",
    install_requires=requirements,
    extras_require={"test": test_requirements},
    entry_points={
        "console_scripts": [
            "etabench=main:main",
        ],
    },
)
