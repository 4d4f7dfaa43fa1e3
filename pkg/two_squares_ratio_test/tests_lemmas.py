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

""" Unit tests for the congruence, summation and exponential sum checks.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import math

# Numerical
import mpmath
import numpy
import sympy

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.exceptions import BadShape, PreconditionViolated, \
    SizeTooLarge
from two_squares_ratio.sieve import primes_upto
from two_squares_ratio.lemmas import *


class GeneralizedCrtCheckTest(SimpleTestCase):

    def test_shapes(self):

        for shape in ((6, 4, 3), (2, 2, 1), (1, 1, 1), (12, 8, 9)):
            result = lemma9_verify(*shape)
            self.assertTrue(result.passed)
            self.assertEqual(result.counterexample, None)
            self.assertEqual(result.checked, shape[0] ** 2 * shape[1] *
                shape[2])


    def test_invalid_shape(self):

        self.assertRaises(BadShape, lemma9_verify, 2, 3, 1)


    def test_exhaustive(self):

        shapes, failures = lemma9_exhaustive()
        self.assertTrue(shapes > 100)
        self.assertEqual(failures, [])


class InverseResidueTest(SimpleTestCase):

    def test_examples(self):

        self.assertTrue(lemma10_verify(1, 3, 5, 2, 7))
        self.assertTrue(lemma10_verify(2, 3, 5, 1, 1))


    def test_sides_are_rational(self):

        left, right = lemma10_sides(2, 3, 5, 1, 1)
        self.assertEqual((left - right).denominator, 1)


    def test_precondition(self):

        self.assertRaises(PreconditionViolated, lemma10_verify, 2, 4, 3, 1, 1)
        self.assertRaises(PreconditionViolated, lemma10_sides, 1, 3, 5, 2, 4)


    def test_sweep(self):

        count = 10 ** 4 if settings.RUN_SLOW else 2000
        self.assertEqual(lemma10_sweep(count), [])


class DerivativeIdentityTest(SimpleTestCase):

    def test_exponential(self):

        self.assertLessEqual(lemma10_5_verify(mpmath.exp, 1, 1, 2, 3), 1e-6)


    def test_other_kernels(self):

        self.assertLessEqual(lemma10_5_verify(lambda z: z, 2, 0.5, 1.5, -2),
            1e-6)
        self.assertLessEqual(lemma10_5_verify(mpmath.cos, 3, 1.2, 0.7, 0.9),
            1e-6)


    def test_kernels(self):

        F1, F2, F3 = derivative_kernels(lambda z: z, 0.5)
        self.assertAlmostEqual(float(F1), 0.5)
        self.assertAlmostEqual(float(F2), 0.5)
        self.assertAlmostEqual(float(F3), 0.5)


    def test_zero_denominator(self):

        self.assertRaises(PreconditionViolated, lemma10_5_verify, mpmath.exp,
            1, 1, 0, 3)


class PartialSummationTest(SimpleTestCase):

    def test_one_dimension(self):

        error = lemma11_verify(1, numpy.ones(10), lambda x: x ** 2, (0, ),
            (10, ))
        self.assertLessEqual(error, 1e-9)


    def test_two_dimensions(self):

        rng = numpy.random.default_rng(settings.SEED)
        c = rng.integers(-5, 6, size = (6, 6))
        error = lemma11_verify(2, c, lambda x, y: sympy.exp(-(x + y) / 20),
            (0, 0), (6, 6))
        self.assertLessEqual(error, 1e-8)


    def test_three_dimensions(self):

        error = lemma11_verify(3, numpy.zeros((3, 3, 3)),
            lambda x, y, z: x * y * z, (1, 1, 1), (4, 4, 4))
        self.assertEqual(error, 0.0)


    def test_limits(self):

        self.assertRaises(SizeTooLarge, lemma11_verify, 1, numpy.ones(31),
            lambda x: x, (0, ), (31, ))
        self.assertRaises(PreconditionViolated, lemma11_verify, 4,
            numpy.ones(1), lambda *x: 1, (0, ) * 4, (1, ) * 4)


class KloostermanTest(SimpleTestCase):

    def test_values(self):

        value = kloosterman(1, 1, 5)
        self.assertAlmostEqual(value.real, 2 - (1 + math.sqrt(5)) / 2,
            delta = 1e-12)
        self.assertLessEqual(abs(value.imag), 1e-10)
        self.assertAlmostEqual(kloosterman(0, 0, 7), complex(6, 0),
            delta = 1e-12)
        self.assertEqual(kloosterman(3, 4, 1), complex(1, 0))


    def test_prime_moduli(self):

        for p in primes_upto(1000):
            value = kloosterman(1, 1, int(p))
            self.assertLessEqual(abs(value.imag), 1e-10)
            self.assertLessEqual(abs(value), 2 * math.sqrt(p) + 1e-9)


    def test_weil_bound(self):

        self.assertLessEqual(weil_bound_check(300), 1 + 1e-9)


    def test_modulus_limit(self):

        self.assertRaises(SizeTooLarge, kloosterman, 1, 1,
            KLOOSTERMAN_MAX_MODULUS + 1)


class TrilinearTest(SimpleTestCase):

    def test_all_ones(self):

        value, ratio = trilinear_B(TrilinearSpec.constant(8, 8, 8, 1))
        self.assertTrue(math.isfinite(abs(value)))
        self.assertTrue(math.isfinite(ratio))


    def test_conjugate(self):

        forward, _ = trilinear_B(TrilinearSpec.constant(10, 12, 6, 1))
        backward, _ = trilinear_B(TrilinearSpec.constant(10, 12, 6, -1))
        self.assertAlmostEqual(forward, backward.conjugate(), delta = 1e-9)


    def test_coprimality_filter(self):

        spec = TrilinearSpec(4, 8, 4, 1, (1.0, 1.0, 1.0),
            (0.0, 0.0, 1.0, 0.0, 0.0), (1.0, 1.0, 1.0))
        self.assertEqual(trilinear_B(spec), (0j, 0.0))


    def test_validation(self):

        self.assertRaises(BadShape, TrilinearSpec, 4, 8, 4, 1, (1.0, ),
            (1.0, ) * 5, (1.0, ) * 3)
        self.assertRaises(PreconditionViolated, TrilinearSpec.constant, 8, 8,
            8, 0)
        self.assertRaises(SizeTooLarge, TrilinearSpec.constant, 201, 8, 8, 1)


    def test_sweep(self):

        ratios = trilinear_sweep(5)
        self.assertEqual(len(ratios), 5)
        self.assertTrue(all(math.isfinite(r) and r >= 0 for r in ratios))


class DiagnosticsTest(SimpleTestCase):

    def test_euler_factor_series(self):

        self.assertEqual(euler_factor_coefficients(), [1, 0, 0,
            sympy.Rational(-1, 24), sympy.Rational(-49, 2880)])


    def test_shiu(self):

        ratio = shiu_ratio(10 ** 4)
        self.assertTrue(math.isfinite(ratio))
        self.assertGreater(ratio, 0)


    def test_richert_halberstam(self):

        result = richert_halberstam_ratio(10 ** 4)
        self.assertTrue(math.isfinite(result.ratio))
        self.assertGreater(result.ratio, 0)
        self.assertGreater(result.A, 0)


    def test_conductor_table(self):

        top = 300 if settings.RUN_SLOW else 60
        checked, failures = conductor_table(top)
        self.assertGreater(checked, 0)
        self.assertEqual(failures, [])
