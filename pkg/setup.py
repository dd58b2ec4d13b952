from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="satlab",
    version="0.3.0",
    description="Transfer systems on finite Abelian groups and their realization by linear isometries universes",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["satlab", "satlab.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    install_requires=[
        "typer>=0.9.0",
        "click>=8.1.0",
        "rich>=13.7.0",
        "pyyaml>=6.0.1",
        "numpy>=1.26.0",
        "pydantic>=2.0.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "satlab=satlab.cli.main:main",
        ],
    },
)
