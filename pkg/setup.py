#!/usr/bin/env python
# -*- coding: utf-8 -*-

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')

setup(
    name='gammastage',
    version='0.1.0',
    description='Degree counting for partial E-infinity structures: obstruction windows, Kochman bases, tree spaces and Dyer-Lashof bookkeeping.',
    long_description=readme + '\n\n' + history,
    author='The gammastage developers',
    author_email='gammastage@users.noreply.github.com',
    packages=[
        'gammastage',
    ],
    package_dir={'gammastage': 'gammastage'},
    include_package_data=True,
    install_requires=[
        'PyYAML',
        'sympy',
    ],
    tests_require=[
        'hypothesis',
    ],
    entry_points={
        'console_scripts': [
            'gammastage=gammastage.cli:main',
        ],
    },
    license="GPLv3",
    zip_safe=False,
    keywords='gammastage e-infinity gamma-cohomology brown-peterson kochman dyer-lashof',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    test_suite='tests',
)
