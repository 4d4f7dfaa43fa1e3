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

""" Tests for the settings view over ``django.conf.settings``.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Django
from django.conf import settings as django_settings
from django.core import exceptions as django_exceptions
from django.test import SimpleTestCase, override_settings

# Two Squares Ratio Lab
from two_squares_ratio.exceptions import ImproperlyConfigured, RatioLabError
from two_squares_ratio.conf import *


class LabSettingsTest(SimpleTestCase):

    def test_declared_values(self):

        self.assertEqual(settings.SEGMENT_SIZE, 2 ** 12)
        self.assertEqual(settings.CONSTANTS_PRIME_LIMIT, 10 ** 5)
        self.assertEqual(settings.THREADS, 1)


    def test_defaults(self):

        self.assertFalse(hasattr(django_settings, 'TSRL_QUAD_LIMIT'))
        self.assertEqual(settings.QUAD_LIMIT, DEFAULTS['QUAD_LIMIT'])
        self.assertEqual(settings.SIEVE_LIMIT, 2 * 10 ** 9)
        self.assertEqual(settings.MIN_PRIME_LIMIT, 10 ** 5)


    @override_settings(TSRL_SEED = 7, TSRL_EXACT_LIMIT = 10)
    def test_override_settings(self):

        self.assertEqual(settings.SEED, 7)
        self.assertEqual(settings.EXACT_LIMIT, 10)


    def test_assignment(self):

        saved = settings.SEED
        try:
            settings.SEED = 99
            self.assertEqual(django_settings.TSRL_SEED, 99)
            self.assertEqual(settings.SEED, 99)
        finally:
            settings.SEED = saved
        self.assertEqual(settings.SEED, saved)


    def test_unknown_names(self):

        self.assertRaises(AttributeError, getattr, settings, 'NOTHING')
        self.assertRaises(AttributeError, setattr, settings, 'NOTHING', 1)
        self.assertEqual(dir(settings), sorted(DEFAULTS))


class ImproperlyConfiguredTest(SimpleTestCase):

    def test_hierarchy(self):

        self.assertTrue(issubclass(ImproperlyConfigured,
            django_exceptions.ImproperlyConfigured))
        self.assertTrue(issubclass(ImproperlyConfigured, RatioLabError))
