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

""" Unit tests for the Euler-product constants.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import math
from unittest import skipUnless

# Numerical
import mpmath
import numpy

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.exceptions import PreconditionViolated
from two_squares_ratio.constants import *
from two_squares_ratio.constants import _log_sum


class GammaQuarterTest(SimpleTestCase):

    def test_value(self):

        self.assertAlmostEqual(float(gamma_quarter()), 3.625609908,
            delta = 1e-9)


    def test_reflection(self):

        value = gamma_quarter() * mpmath.gamma(mpmath.mpf(3) / 4)
        self.assertAlmostEqual(float(value), math.pi * math.sqrt(2),
            delta = 1e-12)


    def test_recurrence(self):

        self.assertAlmostEqual(float(gamma_quarter() / 4),
            float(mpmath.gamma(mpmath.mpf(5) / 4)), delta = 1e-12)


class LSeriesTest(SimpleTestCase):

    def test_accelerated(self):

        self.assertAlmostEqual(float(l_one_chi4()), math.pi / 4,
            delta = 1e-15)


    def test_partial_sum(self):

        self.assertAlmostEqual(float(l_one_chi4(4, accelerate = False)),
            1 - 1 / 3 + 1 / 5 - 1 / 7, delta = 1e-15)


    def test_short_acceleration(self):

        self.assertRaises(PreconditionViolated, l_one_chi4, 10)


class FactorTest(SimpleTestCase):

    def test_c1_factor(self):

        self.assertAlmostEqual(c1_single_factor(5),
            (4 / 6) ** 0.25 * (0.25 + 4 * math.log(5 / 4)), delta = 1e-12)
        self.assertAlmostEqual(c1_single_factor(5), 1.0325, delta = 1e-4)


    def test_k_factor_at_two(self):

        factor = math.exp(k_log_factors(numpy.array([2.0]))[0])
        self.assertAlmostEqual(factor, (1 + math.log(2)) / math.sqrt(2),
            delta = 1e-12)


    def test_p3_factor(self):

        factor = math.exp(p3_log_factors(numpy.array([3.0]))[0])
        self.assertAlmostEqual(factor, (8 / 9) ** 0.25 * 1.2, delta = 1e-12)


    def test_c_factor(self):

        values = numpy.exp(c_log_factors(numpy.array([2.0, 3.0, 5.0])))
        self.assertEqual(values[0], 1.0)
        self.assertAlmostEqual(values[1], 1 - 1 / 6, delta = 1e-14)
        self.assertAlmostEqual(values[2], 1 + 1 / 20, delta = 1e-14)


    def test_inner_series(self):

        series, closed = p1_inner_series(5)
        self.assertAlmostEqual(series, closed, delta = 1e-14)


class ProductTest(SimpleTestCase):

    def test_c1(self):

        value = c1_closed_form()
        self.assertAlmostEqual(value.value, 0.339385, delta = 5e-6)
        low, high = value.interval
        self.assertTrue(low <= value.value <= high)


    def test_identity(self):

        self.assertAlmostEqual(c1_closed_form().value,
            c1_via_identity().value, delta = 1e-6)


    def test_k(self):

        self.assertAlmostEqual(korolev_K().value, 0.75782, delta = 5e-5)


    def test_main_term_constant(self):

        self.assertAlmostEqual(pi_c_over_four().value,
            math.pi * c_constant().value / 4, delta = 1e-15)


    def test_prime_limit(self):

        self.assertRaises(PreconditionViolated, c1_closed_form, 1000)


    def test_report(self):

        report = constants_report()
        self.assertEqual([record['name'] for record in report], ['c1',
            'c1_identity', 'K', 'c', 'P1', 'P3', 'G1', 'gamma_quarter',
            'L1_chi4'])
        for record in report:
            self.assertTrue(record['interval_lo'] <= record['value'] <=
                record['interval_hi'])


    def test_log_sum_precision(self):

        total = _log_sum(numpy.array([1.0, 2.0 ** -60, -1.0, 2.0 ** -60]))
        self.assertEqual(total, mpmath.mpf(2) ** -59)
        total = _log_sum(numpy.array([1.0, 2.0 ** -60]))
        self.assertNotEqual(float(total - 1), 0.0)


    def test_interval_nesting(self):

        for build in (c1_closed_form, korolev_K, c_constant):
            coarse, fine = build(10 ** 5), build(4 * 10 ** 5)
            low, high = coarse.interval
            self.assertTrue(low <= fine.value <= high)
            self.assertTrue(fine.tail_bound < coarse.tail_bound)


class FullScaleProductTest(SimpleTestCase):

    @skipUnless(settings.RUN_SLOW, 'products over all primes below 10^7')
    def test_c1(self):

        closed = c1_closed_form(10 ** 7)
        self.assertAlmostEqual(closed.value, 0.339385, delta = 5e-6)
        self.assertAlmostEqual(closed.value, c1_via_identity(10 ** 7).value,
            delta = 1e-9)


    @skipUnless(settings.RUN_SLOW, 'products over all primes below 10^7')
    def test_k(self):

        self.assertAlmostEqual(korolev_K(10 ** 7).value, 0.75782,
            delta = 5e-5)


    @skipUnless(settings.RUN_SLOW, 'products over all primes below 10^7')
    def test_interval_nesting(self):

        for build in (c1_closed_form, c1_via_identity, korolev_K):
            low, high = build(10 ** 5).interval
            self.assertTrue(low <= build(10 ** 7).value <= high)
