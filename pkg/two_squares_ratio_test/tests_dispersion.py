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

""" Unit tests for the dispersion sums.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import cmath
import math

# Numerical
import numpy

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.exceptions import PreconditionViolated, SizeTooLarge
from two_squares_ratio.dispersion import *


SMALL = DispersionParams(8, 16, 64, j2 = 40)


class ParamsTest(SimpleTestCase):

    def test_validation(self):

        self.assertRaises(PreconditionViolated, DispersionParams, 4, 32, 16)
        self.assertRaises(PreconditionViolated, DispersionParams, 0, 8, 16)
        self.assertRaises(PreconditionViolated, DispersionParams, 4, 8, 16,
            k = 0)
        self.assertRaises(PreconditionViolated, DispersionParams, 4, 8, 16,
            j1 = 20, j2 = 10)
        self.assertRaises(SizeTooLarge, DispersionParams, 2000, 8, 16)


    def test_dyadic(self):

        self.assertEqual(list(dyadic(1)), [2])
        self.assertEqual(list(dyadic(8)), list(range(9, 17)))
        self.assertEqual(list(dyadic(2.5)), [3, 4, 5])


    def test_interval_primes(self):

        self.assertEqual(list(SMALL.interval_primes()), [3, 5, 7, 11, 13,
            17, 19, 23, 29, 31, 37])
        self.assertEqual(SMALL.x_limit, 128)


class WeightsTest(SimpleTestCase):

    def test_first_level(self):

        weights = build_weights(DispersionParams(4, 8, 16, j1 = 2, j2 = 10))
        self.assertEqual(weights.a_at(1), 1)
        self.assertEqual(weights.a_at(2), 1)
        self.assertEqual(weights.a_at(4), 1)
        self.assertEqual(weights.a_at(5), 0)
        self.assertEqual(weights.a_at(9), 0)
        self.assertEqual(weights.a_at(0), 0)
        self.assertEqual(weights.a_at(10 ** 6), 0)
        self.assertEqual(weights.b_at(5), 1)
        self.assertEqual(weights.b_at(13), 0)
        self.assertEqual(weights.b_at(3), 0)


    def test_second_level(self):

        weights = build_weights(DispersionParams(4, 8, 32, k = 2, j2 = 10))
        self.assertEqual(weights.a_at(10), 0.5)
        self.assertEqual(weights.a_at(2), 0)
        self.assertEqual(weights.a_at(25), 0)


    def test_empty_interval(self):

        weights = build_weights(DispersionParams(4, 8, 16, j1 = 10, j2 = 10))
        self.assertFalse(weights.b.any())
        self.assertEqual(weights.a_at(5), 0.5)


    def test_cap(self):

        weights = build_weights(DispersionParams(4, 8, 16, j2 = 10,
            x_cap = 20))
        self.assertEqual(weights.a_at(16), 1)
        self.assertEqual(weights.a_at(29), 0)


    def test_twist(self):

        weights = build_weights(DispersionParams(4, 8, 16, t = 1.0, j2 = 10))
        self.assertAlmostEqual(weights.a_at(2), cmath.exp(-1j * math.log(2)),
            delta = 1e-15)
        self.assertAlmostEqual(abs(weights.b_at(5)), 1.0, delta = 1e-15)


class UTildeTest(SimpleTestCase):

    def test_against_loop(self):

        self.assertAlmostEqual(u_tilde(SMALL), u_tilde_naive(SMALL),
            delta = 1e-9)
        twisted = DispersionParams(6, 12, 40, t = 2.5, k = 2, j2 = 30)
        self.assertAlmostEqual(u_tilde(twisted), u_tilde_naive(twisted),
            delta = 1e-9)


    def test_empty_b(self):

        params = DispersionParams(8, 16, 64)
        self.assertEqual(u_tilde(params), 0j)
        self.assertEqual(u_tilde_naive(params), 0j)


    def test_even_moduli(self):

        params = DispersionParams(1, 16, 64, j2 = 40)
        self.assertEqual(u_tilde(params), 0j)
        self.assertEqual(w_v_u(params), (0j, 0j, 0j))
        self.assertEqual(u_regrouped(params), 0j)


    def test_thread_count_independent(self):

        self.assertEqual(u_tilde(SMALL, threads = 1),
            u_tilde(SMALL, threads = 2))


class VarianceTest(SimpleTestCase):

    def test_regrouped(self):

        _, _, U = w_v_u(SMALL)
        self.assertAlmostEqual(u_regrouped(SMALL), U,
            delta = 1e-9 * max(1.0, abs(U)))


    def test_real_parts(self):

        W, _, U = w_v_u(SMALL)
        self.assertEqual(W.imag, 0.0)
        self.assertEqual(U.imag, 0.0)
        self.assertGreaterEqual(W.real, 0.0)


    def test_main_term_is_real(self):

        for params in (SMALL, DispersionParams(6, 12, 40, t = 2.5, j2 = 30)):
            main = u_mt(params)
            self.assertLessEqual(abs(main.imag), 1e-10 * max(1.0, abs(main)))


    def test_w_main_term(self):

        main = w_mt(SMALL)
        self.assertEqual(main, w_mt(SMALL, 16))
        self.assertLessEqual(abs(main.imag), 1e-10 * max(1.0, abs(main)))
        self.assertRaises(PreconditionViolated, w_mt, SMALL, 17)


    def test_inequality(self):

        check = dispersion_inequality_check(SMALL)
        self.assertTrue(check.ok)
        self.assertGreaterEqual(check.rhs, -1e-9)


    def test_sweep(self):

        count = 100 if settings.RUN_SLOW else 20
        results = inequality_sweep(count)
        self.assertEqual(len(results), count)
        self.assertEqual([params for params, check in results
            if not check.ok], [])


    def test_norm(self):

        weights = build_weights(SMALL)
        expected = math.fsum(abs(weights.a_at(m)) ** 2 for m in dyadic(64))
        self.assertAlmostEqual(norm_a(SMALL, weights), expected,
            delta = 1e-12)


class FactorizationTest(SimpleTestCase):

    def test_membership(self):

        params = DispersionParams(4, 8, 16, k = 2, j2 = 40)
        self.assertTrue(in_a_k(65, 2, params))
        self.assertTrue(in_a_k(10, 1, params))
        self.assertFalse(in_a_k(15, 2, params))
        self.assertFalse(in_a_k(25, 1, params))


    def test_representations(self):

        params = DispersionParams(4, 8, 16, k = 2, j2 = 40)
        self.assertEqual(a_k_representations(params, 65), [(5, 13), (13, 5)])
        self.assertRaises(PreconditionViolated, a_k_representations,
            params, 15)


class ReportTest(SimpleTestCase):

    def test_fields(self):

        report = dispersion_report(SMALL, X = 8)
        for name in ('u_tilde_re', 'u_tilde_im', 'W', 'V_re', 'V_im', 'U',
                'U_MT', 'U_MT_im', 'W_MT', 'W_minus_W_MT', 'norm_a_sq', 'lhs',
                'rhs', 'ok', 'V_minus_U_MT_ratio', 'W_MT_truncated',
                'W_MT_truncation_ratio'):
            self.assertTrue(name in report, name)
        self.assertTrue(report['ok'])
        self.assertFalse('W_MT_truncated' in dispersion_report(SMALL))
