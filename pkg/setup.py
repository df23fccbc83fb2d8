from os.path import exists

from setuptools import find_packages, setup

description = open("README.md").read() if exists("README.md") else ""

setup(
    name="oreh",
    description="Exact computer algebra for the differential Ore extensions A_h = k[x][t; h d/dx]",
    long_description=description,
    long_description_content_type="text/markdown",
    license="Apache License 2.0",
    packages=find_packages(include=["oreh", "oreh.*"]),
    entry_points={
        "console_scripts": [
            "oh = oreh.cli.main:cli",
        ],
    },
    use_scm_version={"write_to": "oreh/_version.py", "fallback_version": "0.0.0"},
    setup_requires=["setuptools_scm"],
    install_requires=[
        "click",
        "pydantic>=1.9.1,<2.0.0",
        "rich",
        "ruamel.yaml",
        "sympy>=1.13",
    ],
    extras_require={
        "dev": [
            "autoflake==1.7.7",
            "black==22.6.0",
            "hypothesis",
            "isort==5.10.1",
            "mypy~=1.0.0",
            "pre-commit",
            "pytest",
            "pytest-mock",
        ],
    },
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
