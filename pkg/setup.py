# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import os
import subprocess
import sys

from setuptools import Command, setup


def read(filename):
    with open(os.path.join(os.path.dirname(__file__), filename)) as f:
        return f.read()


class RunTests(Command):
    description = "Run the unit test suite for permuton."
    user_options = []
    extra_env = {}
    extra_args = []

    def run(self):
        run_tests_script_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'permuton', 'run_tests.py')
        sys.exit(subprocess.call([sys.executable, run_tests_script_path]))

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

setup(
    name='permuton',
    version='0.1.0',
    author='The permuton developers',
    packages=['permuton', 'permuton.test'],
    install_requires=['numpy>=1.22'],
    python_requires='>=3.8',
    entry_points={'console_scripts': ['permuton=permuton.Application:Application.main']},
    license='LICENSE.txt',
    description='Mallows permutations, their limit densities and the finite-n identities behind them.',
    long_description=read('README.rst'),
    cmdclass={'test': RunTests},
    keywords="mallows permutation permuton monte-carlo",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics"
    ]
)
