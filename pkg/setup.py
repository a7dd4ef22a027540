from setuptools import setup, find_packages

setup(
    name="diu",
    version="0.1.0",
    description="MD5, SHA-1 and SHA-192 digests with a unified MD5/SHA-192 datapath model",
    author="diu",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"diu": ["data/*.txt"]},
    python_requires=">=3.9",
    install_requires=[
        "matplotlib>=3.7",
        "numpy>=1.24",
        "pandas>=2.0",
    ],
    extras_require={
        "dev": ["pytest"],
    },
    entry_points={
        "console_scripts": ["diu=diu.cli:main"],
    },
)
