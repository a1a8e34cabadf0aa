#!/usr/bin/env python
# Root manifest so the package can be installed from the repository root;
# the package sources live in mqkd/ (mirrors mqkd/setup.py).
from setuptools import setup, find_packages
from os import path

this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'mqkd', 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='mqkd',
    description='Exact simulator for lightweight mediated quantum key distribution with an untrusted third party',
    long_description=long_description,
    long_description_content_type='text/markdown',
    version='0.1',
    package_dir={'': 'mqkd'},
    packages=find_packages('mqkd'),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.21",
        "pandas>=1.3",
        "configargparse",
        "flake8==4.0.1",
        "pytest-flake8==1.1.1",
        "pytest==7.0.1",
        "pyyaml",
        "timeout_decorator",
    ],
    entry_points={
        "console_scripts": [
            "mqkd=mqkd.bin.cli:main",
            "mqkd_run=mqkd.bin.run:main",
            "mqkd_report=mqkd.bin.report:main",
            "mqkd_sweep=mqkd.bin.sweep:main",
            "mqkd_inspect=mqkd.bin.inspect_transcript:main",
        ],
    },
)
