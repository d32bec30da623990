import setuptools

import sigmadual

setuptools.setup(
    name="sigmadual",
    version=sigmadual.__version__,
    description="sigma-duals of constacyclic codes of length p^s over F_{p^m}+uF_{p^m}",
    packages=[
        "sigmadual",
    ],
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
    install_requires=[
        "click",
        "numpy",
        "sortedcontainers",
    ],
    entry_points={
        "console_scripts": [
            "sigmadual=sigmadual.cli:main",
        ],
    },
)
