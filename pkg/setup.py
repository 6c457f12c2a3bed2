from setuptools import find_packages, setup

with open("requirements.txt") as f:
    requirements = f.read().splitlines()

setup(
    name="permpoly",
    version="0.0.1",
    description="Polynomials representing functions and permutations of Z_p",
    packages=find_packages(),
    package_data={"permpoly": ["config/*.yml"]},
    install_requires=requirements,
    entry_points={"console_scripts": ["permpoly=permpoly.scripts.cli:cli"]},
)
