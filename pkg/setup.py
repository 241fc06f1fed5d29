#!/usr/bin/env python
from setuptools import setup, find_packages


def get_version():
    version = {}
    with open('./uplbench/version.py') as f:
        exec(f.read(), version)
    return version.get('__version__')

setup(
    name='uplbench',
    version=get_version(),
    description='Strong normalisation workbench for an untyped language with '
                'constructors and pattern defined constants',
    author='uplbench',
    license='MIT',
    packages=find_packages(exclude=['tests*']),
    package_data={'uplbench.stdlib': ['*.sig', '*.tt']},
    long_description='Intersection types, filter models and reducibility candidates for untyped rewriting programs',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Development Status :: 4 - Beta',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    install_requires=[
        'lark',
        'six',
        'lxml'
    ],
    entry_points={
        'console_scripts': ['uplbench = uplbench.cli:main'],
    },
)
