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

""" Unit tests for the smooth weights and their transforms.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import math
from unittest import skipUnless

# Numerical
import numpy

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.exceptions import DerivOrderTooHigh, \
    PreconditionViolated
from two_squares_ratio.smooth import *


class BumpTest(SimpleTestCase):

    def test_values(self):

        self.assertAlmostEqual(rho(0), math.exp(-1), delta = 1e-15)
        self.assertEqual(rho(1.5), 0.0)
        self.assertEqual(rho(-1), 0.0)
        self.assertEqual(rho_deriv(0, 1), 0.0)


    def test_integral(self):

        self.assertAlmostEqual(rho_integral(), 0.443994, delta = 1e-6)


    def test_derivative_bound(self):

        grid = numpy.linspace(-0.999, 0.999, 1000)
        for j in range(9):
            bound = rho_deriv_bound(j)
            worst = max(abs(rho_deriv(float(x), j)) for x in grid)
            self.assertLessEqual(worst, bound)


    def test_derivative_against_difference(self):

        step = 1e-6
        for x in (-0.6, 0.1, 0.45):
            difference = (rho_deriv(x + step, 2) - rho_deriv(x - step, 2)) / \
                (2 * step)
            self.assertAlmostEqual(rho_deriv(x, 3), difference,
                delta = 1e-5 * max(1.0, abs(difference)))


    def test_order_limit(self):

        self.assertRaises(DerivOrderTooHigh, rho_deriv, 0.1, 13)


class SigmaTest(SimpleTestCase):

    def test_psi(self):

        self.assertEqual(psi(1.5), 1.0)
        self.assertEqual(psi(0.3), 0.0)
        self.assertEqual(psi(2.6), 0.0)
        self.assertAlmostEqual(psi(0.75), 0.5, delta = 1e-10)
        self.assertAlmostEqual(psi(0.6), psi(2.4), delta = 1e-12)


    def test_f_delta(self):

        self.assertEqual(f_delta(0.1, 0.5), 1.0)
        self.assertEqual(f_delta(0.1, 0.05), 0.0)
        self.assertEqual(f_delta(0.1, 1.2), 0.0)
        self.assertRaises(PreconditionViolated, f_delta_spec, 0.5)


    def test_bad_spec(self):

        self.assertRaises(PreconditionViolated, BumpSpec, 1.0, 1.2, 0.5)


    def test_three_cases(self):

        rng = numpy.random.default_rng(settings.SEED)
        specs = [PSI_SPEC] + [f_delta_spec(d) for d in (0.2, 0.05, 0.01)]
        for spec in specs:
            lo, hi = spec.support
            start, stop = spec.plateau
            for x in rng.uniform(lo - 0.5, hi + 0.5, 1000):
                value = sigma(spec, float(x))
                self.assertTrue(0.0 <= value <= 1.0)
                if start <= x <= stop:
                    self.assertEqual(value, 1.0)
                elif x <= lo or x >= hi:
                    self.assertEqual(value, 0.0)


    def test_window(self):

        self.assertEqual(psi_window(100), (51, 249))


class TransformTest(SimpleTestCase):

    def test_zero_frequency(self):

        value = psi_hat(0).value
        self.assertAlmostEqual(value.real, 1.5, delta = 1e-12)
        self.assertEqual(value.imag, 0.0)
        self.assertTrue(1.0 < value.real < 2.0)


    def test_conjugate_symmetry(self):

        for frequency in (0.3, 2.0, 17.5):
            self.assertAlmostEqual(psi_hat(-frequency).value,
                psi_hat(frequency).value.conjugate(), delta = 1e-12)


    def test_direct_quadrature(self):

        for frequency in (0.0, 0.7, 3.0):
            self.assertAlmostEqual(psi_hat(frequency).value,
                psi_hat_direct(frequency).value, delta = 1e-8)


    def test_decay(self):

        self.assertLessEqual(psi_hat_decay(range(1, 401)), 1e3)
        grid = numpy.geomspace(0.5, 400, 50)
        self.assertLessEqual(psi_hat_decay(grid), 1e3)


    def test_derivative(self):

        self.assertAlmostEqual(psi_hat_deriv(0, 0.7).value,
            psi_hat(0.7).value, delta = 1e-8)


    def assert_derivative_decay(self, head, tail):

        for k in range(5):
            trivial = (2 * math.pi) ** k * (2.5 ** (k + 1) - 0.5 ** (k + 1)) / \
                (k + 1)
            self.assertLessEqual(abs(psi_hat_deriv(k, 0).value), trivial)
            near = psi_hat_deriv_decay(k, head)
            far = psi_hat_deriv_decay(k, tail)
            self.assertTrue(math.isfinite(near))
            self.assertLessEqual(far, near)


    def test_derivative_decay(self):

        self.assert_derivative_decay([1, 3, 10], [100, 200])


    @skipUnless(settings.RUN_SLOW, 'nested quadrature over a log grid')
    def test_derivative_decay_grid(self):

        grid = numpy.geomspace(1, 200, 24)
        self.assert_derivative_decay(grid[grid <= 10], grid[grid >= 100])


    def test_frequency_limit(self):

        self.assertRaises(PreconditionViolated, psi_hat, 2e4)


class MellinTest(SimpleTestCase):

    def test_inversion(self):

        exact, reconstructed, diff = mellin_inversion_check(0.1, 1e3, 0.5)
        self.assertEqual(exact, 1.0)
        self.assertLessEqual(abs(diff), 1e-2)


    def test_truncation_trend(self):

        diffs = [abs(mellin_inversion_check(0.1, T, 0.5)[2])
            for T in (1e3, 2e3, 4e3)]
        for coarse, fine in zip(diffs, diffs[1:]):
            self.assertLessEqual(fine, coarse / 2)


    def test_outside_support(self):

        for T in (1e2, 1e3):
            exact, reconstructed, diff = mellin_inversion_check(0.1, T, 3.0)
            self.assertEqual(exact, 0.0)
            self.assertLessEqual(abs(reconstructed), 1 / (0.1 * T))
            self.assertEqual(diff, -reconstructed)


    def test_bounds_finite(self):

        large, small = mellin_bound_scan(0.1, [0.5, 1, 10, 100])
        self.assertTrue(math.isfinite(large))
        self.assertTrue(math.isfinite(small))


    def test_bad_arguments(self):

        self.assertRaises(PreconditionViolated, mellin_inversion_check, 0.1,
            5, 0.5)


class PoissonTest(SimpleTestCase):

    def test_progression(self):

        check = poisson_check_progression(2, 1, 100)
        self.assertLessEqual(abs(check.diff), 1e-4)


    def test_progression_trend(self):

        coarse = poisson_check_progression(3, 0, 10 ** 2)
        fine = poisson_check_progression(3, 0, 10 ** 3)
        self.assertLessEqual(abs(coarse.diff), 1e-4)
        self.assertLessEqual(abs(fine.diff), abs(coarse.diff) + 1e-12)


    def test_progression_arguments(self):

        self.assertRaises(PreconditionViolated, poisson_check_progression,
            2, 2, 100)
        self.assertRaises(PreconditionViolated, poisson_check_progression,
            2, 1, 100, 1)


    def test_coprime(self):

        check, normalized = poisson_check_coprime(6, 200)
        self.assertTrue(math.isfinite(normalized))
        self.assertLess(abs(check.diff), check.rhs)


    def test_identity(self):

        for H in (10, 100):
            for x in (0.0, 0.3):
                check = poisson_identity_check(H, x)
                self.assertAlmostEqual(check.lhs, check.rhs, delta = 1e-8)
