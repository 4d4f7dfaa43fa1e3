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

""" Unit tests for the ratio sums and their divisor-range split.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import math
from fractions import Fraction
from unittest import skipUnless

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.exceptions import RangeTooLarge
from two_squares_ratio.series import *


class RatioSumTest(SimpleTestCase):

    def test_small_values(self):

        self.assertEqual(q_of_x(1, exact = True).exact, 1)
        self.assertEqual(q_of_x(4, exact = True).exact, Fraction(3, 2))
        self.assertEqual(q_of_x(10, exact = True).exact, 3)
        self.assertEqual(q_of_x(10).value, 3.0)
        self.assertEqual(q_of_x(0, exact = True).value, 0.0)


    def test_oracle_equivalence(self):

        x = 10 ** 5 if settings.RUN_SLOW else 3000
        self.assertEqual(q_of_x(x, exact = True).exact,
            q_of_x_by_factorization(x).exact)


    def test_float_agrees_with_exact(self):

        exact = q_of_x(20000, exact = True)
        fast = q_of_x(20000)
        self.assertEqual(fast.terms_used, exact.terms_used)
        self.assertAlmostEqual(fast.value, float(exact.exact), delta = 1e-9)


    def test_thread_count_independent(self):

        single = q_of_x(30000, threads = 1, segment_size = 1000)
        pooled = q_of_x(30000, threads = 3, segment_size = 1000)
        self.assertEqual(single.value, pooled.value)


    def test_tau_sum(self):

        self.assertEqual(s_of_x(1, exact = True).exact, Fraction(1, 2))
        self.assertEqual(s_of_x(2, exact = True).exact, Fraction(3, 2))
        self.assertEqual(s_of_x(3, exact = True).exact,
            Fraction(3, 2) + Fraction(2, 3))
        self.assertAlmostEqual(s_of_x(500).value,
            float(s_of_x(500, exact = True).exact), delta = 1e-10)


    def test_limits(self):

        self.assertRaises(RangeTooLarge, q_of_x, settings.EXACT_LIMIT + 1,
            exact = True)
        self.assertRaises(RangeTooLarge, q_of_x, settings.SIEVE_LIMIT + 1)


    def test_normalized(self):

        result = q_of_x(10000)
        self.assertAlmostEqual(result.normalized,
            result.value * math.log(10000) ** 0.75 / 10000)
        self.assertTrue(math.isnan(q_of_x(1).normalized))


    def test_checkpoints(self):

        sums = checkpoint_sums([10, 4, 0.5, 10], [CHANNEL_Q])[CHANNEL_Q]
        self.assertEqual([value for value, _ in sums], [3.0, 1.5, 0.0, 3.0])


class DecompositionTest(SimpleTestCase):

    def test_split_points(self):

        self.assertEqual(split_points(1, 2), (math.inf, math.inf))
        lower, upper = split_points(10 ** 4, 2)
        self.assertLess(lower, 100)
        self.assertGreater(upper, 100)


    def test_exact_identity(self):

        total = q_of_x(10 ** 4, exact = True).exact
        for A in (1, 2, 5):
            self.assertEqual(q_decomposition(10 ** 4, A).total, total)


    def test_small(self):

        self.assertEqual(q_decomposition(10, 1).total, 3)
        parts = q_decomposition(1, 3)
        self.assertEqual(parts.total, 1)
        self.assertEqual(parts.as_tuple(), (Fraction(1), Fraction(0),
            Fraction(0)))


class ErrorTermTest(SimpleTestCase):

    def test_trivial(self):

        self.assertEqual(qerr2_direct(1, 1), 0.0)


    def test_finite(self):

        value = qerr2_direct(10 ** 4, 2)
        self.assertTrue(math.isfinite(value))
        self.assertAlmostEqual(qerr2_normalized(10 ** 4, 2),
            abs(value) * math.log(10 ** 4) ** 0.75 / 10 ** 4)


    @skipUnless(settings.RUN_SLOW, 'long-running trend check')
    def test_trend(self):

        self.assertLessEqual(qerr2_normalized(10 ** 5, 2),
            qerr2_normalized(10 ** 4, 2))
