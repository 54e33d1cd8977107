from setuptools import setup, find_packages

setup(
    name="superfg",
    version="0.1",
    description="super Fock-Goncharov cluster ensembles: mutation, quantum tori, fiber curves and hexagon periods",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "numpy",
        "scipy",
        "sympy",
        "fire",
        "tqdm",
    ],
    extras_require={
        "test": ["pytest", "mpmath"],
    },
    entry_points={
        "console_scripts": ["superfg=superfg.cli:main"],
    },
)
