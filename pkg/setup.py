import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("VERSION", "r") as v:
    VERSION = v.read().strip()

setuptools.setup(
    name="coregames",
    version=VERSION,
    description="Cores of simple games with preferences: Nakamura and kappa numbers, empty-core witnesses, exhaustive verification",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
    ],
    python_requires=">=3.6",
    install_requires=[
        "Jinja2",
        "pyyaml",
        "six",
    ],
    extras_require={
        "tests": ["pytest"],
    },
)
