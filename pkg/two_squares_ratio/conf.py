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

""" Two Squares Ratio Lab settings.

    Every value is read from ``django.conf.settings`` under a ``TSRL_`` prefix,
    so a project (or the test application) overrides ``SEGMENT_SIZE`` by
    declaring ``TSRL_SEGMENT_SIZE`` in the module named by
    ``DJANGO_SETTINGS_MODULE``. Names a settings module does not declare fall
    back to :data:`DEFAULTS`. When no settings module is named, Django is
    configured with its global defaults on first access, which is how the
    ``tsrl`` command runs.

    Assignments (``settings.THREADS = 4``) are written through to Django's
    settings, so ``django.test.override_settings`` and direct assignment see
    the same values.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import os

# Django
from django.conf import ENVIRONMENT_VARIABLE, settings as django_settings


PREFIX = 'TSRL_'

DEFAULTS = {
    # Sieve engine.
    'SEGMENT_SIZE': 2 ** 22,
    'SIEVE_LIMIT': 2 * 10 ** 9,
    'TABLE_LIMIT': 2 ** 28,
    'THREADS': max(1, int(os.environ.get('TSRL_THREADS') or 1)),

    # Series.
    'EXACT_LIMIT': 10 ** 6,
    'DECOMPOSITION_LIMIT': 10 ** 7,
    'CHARACTER_SUM_LIMIT': 10 ** 7,

    # Characters.
    'MAX_MODULUS': 10 ** 5,

    # Constants engine.
    'CONSTANTS_PRIME_LIMIT': 10 ** 7,
    'MIN_PRIME_LIMIT': 10 ** 5,
    'TAIL_WINDOW': (10 ** 3, 10 ** 4),
    'TAIL_SAFETY': 2.0,
    'MP_DPS': 30,

    # Quadrature.
    'QUAD_EPSABS': 1e-12,
    'QUAD_LIMIT': 200,

    # Randomized sweeps.
    'SEED': 0x2A,

    # Long-running acceptance checks in the test suite.
    'RUN_SLOW': False,
}


def _configured():
    if not django_settings.configured and \
            not os.environ.get(ENVIRONMENT_VARIABLE):
        django_settings.configure()
    return django_settings


class LabSettings(object):
    """ Attribute view of the ``TSRL_`` settings with library defaults. """

    def __getattr__(self, name):
        if not name in DEFAULTS:
            raise AttributeError("unknown setting %r" % name)
        return getattr(_configured(), PREFIX + name, DEFAULTS[name])


    def __setattr__(self, name, value):
        if not name in DEFAULTS:
            raise AttributeError("unknown setting %r" % name)
        setattr(_configured(), PREFIX + name, value)


    def __dir__(self):
        return sorted(DEFAULTS)


settings = LabSettings()
