# -*- coding: utf-8 -*-
#
# This document is free and open-source software, subject to the OSI-approved
# BSD license below.
#
# Copyright (c) 2024 Two Squares Ratio Lab contributors,
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
# list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and/or other materials provided with the distribution.
#
# * Neither the name of the author nor the names of its contributors may be used
# to endorse or promote products derived from this software without specific
# prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.

""" Setuptools for Two Squares Ratio Lab.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )

# Setup tools
from setuptools import setup, find_packages


setup(
    name = 'two-squares-ratio',
    version = "1.0.0",
    packages = find_packages(exclude = ['two_squares_ratio_test']),
    maintainer = 'Two Squares Ratio Lab contributors',
    keywords = 'number theory, sums of two squares, sieve, dispersion, '
        'euler products',
    license = 'BSD',
    description = 'Numerical experiments on the ratio sum of r(n)/r(n+1) '
        'over sums of two squares.',
    classifiers = [
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Framework :: Django',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires = '>= 3.9',
    install_requires = [
        'Django >= 3.2',
        'numpy >= 1.22',
        'scipy >= 1.8',
        'mpmath >= 1.2',
        'sympy >= 1.10',
    ],
    entry_points = {
        'console_scripts': [ 'tsrl = two_squares_ratio.cli:main', ],
    },
    zip_safe = True)
