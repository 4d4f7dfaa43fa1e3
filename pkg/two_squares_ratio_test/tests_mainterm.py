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

""" Unit tests for the main term of the ratio sum.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import math
import random
from fractions import Fraction
from unittest import skipUnless

# Django
from django.test import SimpleTestCase, override_settings

# Two Squares Ratio Lab
from two_squares_ratio.arith import is_prime
from two_squares_ratio.conf import settings
from two_squares_ratio.constants import pi_c_over_four
from two_squares_ratio.exceptions import PreconditionViolated, RangeTooLarge
from two_squares_ratio.series import q_of_x
from two_squares_ratio.mainterm import *


class DensityTest(SimpleTestCase):

    def test_values(self):

        self.assertEqual(E(1), 1)
        self.assertEqual(E(2), 1)
        self.assertEqual(E(5), Fraction(16, 21))
        self.assertEqual(E(3), Fraction(8, 5))
        self.assertEqual(E(9), Fraction(8, 5))


    def test_multiplicative(self):

        self.assertEqual(E(15), E(3) * E(5))
        self.assertEqual(E(2 * 3 * 13), E(3) * E(13))


    def test_multiplicative_pairs(self):

        rng = random.Random(settings.SEED)
        primes = [p for p in range(2, 200) if is_prime(p)]
        for _ in range(10 ** 4):
            chosen = rng.sample(primes, 6)
            m = n = 1
            for index, p in enumerate(chosen):
                power = p ** rng.randint(1, 3)
                if index % 2 and m * power < 2 ** 31:
                    m *= power
                elif not index % 2 and n * power < 2 ** 31:
                    n *= power
            self.assertEqual(E(m * n), E(m) * E(n))


    def test_checks(self):

        self.assertEqual(euler_factor_checks(500), [])


class SummatoryTest(SimpleTestCase):

    def test_small(self):

        self.assertEqual(H_of(1), 1.0)
        self.assertEqual(H_of(2), 2.0)
        self.assertEqual(H_of(4), 3.0)
        self.assertEqual(H_of(0.5), 0.0)


    def test_odd_part(self):

        for x in (10, 777, 5000):
            self.assertAlmostEqual(h_one_of(x), H_of(x) - H_of(x / 2),
                delta = 1e-9 * H_of(x))


class MainTermTest(SimpleTestCase):

    def test_small(self):

        factor = pi_c_over_four().value
        self.assertAlmostEqual(q_mt(1), factor, delta = 1e-15)
        self.assertAlmostEqual(q_mt(4), 3 * factor, delta = 1e-14)


    def test_monotone(self):

        values = [q_mt(x) for x in (10, 100, 1000, 10000)]
        self.assertEqual(values, sorted(values))


    def test_asymptotic_scaling(self):

        first = h_asymptotic(100) * math.log(100) ** 0.75 / 100
        second = h_asymptotic(10 ** 6) * math.log(10 ** 6) ** 0.75 / 10 ** 6
        self.assertAlmostEqual(first, second, delta = 1e-12)
        self.assertRaises(PreconditionViolated, h_asymptotic, 2)


    def test_local_density(self):

        self.assertEqual(local_density_sum(5, 0), 0.0)
        for n in (1, 5, 12):
            self.assertAlmostEqual(local_density_sum(n, 10 ** 5),
                pi_c_over_four().value * float(E(n)), delta = 1e-2)


    def test_direct(self):

        expected = pi_c_over_four().value * H_of(2000)
        self.assertAlmostEqual(q_mt_direct(2000) / expected, 1.0,
            delta = 0.05)
        self.assertRaises(RangeTooLarge, q_mt_direct, 10 ** 7)


class TableTest(SimpleTestCase):

    def test_rows(self):

        reports = main_term_table([1000, 20000])
        self.assertEqual([r.x for r in reports], [1000, 20000])
        for report in reports:
            self.assertAlmostEqual(report.Q, q_of_x(report.x).value,
                delta = 1e-9)
            self.assertAlmostEqual(report.H, H_of(report.x), delta = 1e-9)
            self.assertAlmostEqual(report.q_mt, q_mt(report.x),
                delta = 1e-9)
            self.assertTrue(report.q_mt_lo <= report.q_mt <= report.q_mt_hi)
            self.assertEqual(tuple(report.as_row()), CSV_FIELDS)


    def test_empty(self):

        self.assertEqual(main_term_table([]), [])


class TrendTest(SimpleTestCase):

    @skipUnless(settings.RUN_SLOW, 'sieves up to 10^8')
    @override_settings(TSRL_SEGMENT_SIZE = 2 ** 22)
    def test_trends(self):

        xs = [10 ** 4, 10 ** 5, 10 ** 6, 10 ** 7, 10 ** 8]
        reports = dict((r.x, r) for r in main_term_table(xs))
        errors = [abs(reports[x].ratio_H - 1) for x in xs]
        for before, after in zip(errors, errors[1:]):
            self.assertTrue(after < before)
        errors = [abs(reports[x].ratio - 1) for x in (10 ** 4, 10 ** 6,
            10 ** 8)]
        for before, after in zip(errors, errors[1:]):
            self.assertTrue(after < before)
        x = 10 ** 8
        normalized = reports[x].Q * math.log(x) ** 0.75 / x
        self.assertTrue(0.2 <= normalized <= 0.6)
