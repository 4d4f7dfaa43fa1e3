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

""" Unit tests for the arithmetic core.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import random
from unittest import skipUnless

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.arith import *
from two_squares_ratio.exceptions import BadShape, NotCoprime, NoSolution


SMALL_PRIMES = [p for p in range(2, 1000) if is_prime(p)]


def coprime_pairs(count, bound = 2 ** 31):
    """ `count` seeded pairs of coprime integers below `bound`, built from
        disjoint sets of primes below 1000.
    """
    rng = random.Random(settings.SEED)
    pairs = []
    while len(pairs) < count:
        chosen = rng.sample(SMALL_PRIMES, 8)
        m = n = 1
        for index, p in enumerate(chosen):
            power = p ** rng.randint(1, 3)
            if index % 2 and m * power < bound:
                m *= power
            elif not index % 2 and n * power < bound:
                n *= power
        pairs.append((m, n))
    return pairs


class ModularInverseTest(SimpleTestCase):

    def test_inverse(self):

        self.assertEqual(mod_inv(3, 10), 7)
        self.assertEqual(mod_inv(1, 1), 0)
        self.assertEqual(mod_inv(-3, 10), 3)


    def test_not_coprime(self):

        self.assertRaises(NotCoprime, mod_inv, 4, 8)


    def test_inverse_property(self):

        rng = random.Random(0x2A)
        for _ in range(200):
            q = rng.randint(2, 10 ** 6)
            a = rng.randint(1, q - 1)
            if gcd(a, q) == 1:
                self.assertEqual(a * mod_inv(a, q) % q, 1)


class FactorizationTest(SimpleTestCase):

    def test_small(self):

        self.assertEqual(factorize(360).factors, ((2, 3), (3, 2), (5, 1)))
        self.assertEqual(factorize(1).factors, ())
        self.assertEqual(factorize(10 ** 9 + 7).factors, ((10 ** 9 + 7, 1), ))


    def test_large_semiprime(self):

        p, q = 1000000007, 998244353
        self.assertEqual(factorize(p * q).factors, ((q, 1), (p, 1)))
        self.assertTrue(is_prime(p))
        self.assertFalse(is_prime(p * q))


    def test_prime_power_cofactor(self):

        p = 1000003
        self.assertEqual(factorize(p ** 3).factors, ((p, 3), ))


    def test_product_identity(self):

        rng = random.Random(0x2A)
        for _ in range(100):
            n = rng.randint(1, 2 ** 62)
            product = 1
            for p, e in factorize(n).factors:
                self.assertTrue(is_prime(p))
                product *= p ** e
            self.assertEqual(product, n)


    def test_divisors(self):

        self.assertEqual(factorize(12).divisors(), [1, 2, 3, 4, 6, 12])
        self.assertEqual(factorize(360).radical(), 30)


class MultiplicativeFunctionTest(SimpleTestCase):

    def test_chi4(self):

        self.assertEqual(chi4(1), 1)
        self.assertEqual(chi4(7), -1)
        self.assertEqual(chi4(4), 0)


    def test_h(self):

        self.assertEqual(h(5), 2)
        self.assertEqual(h(9), 1)
        self.assertEqual(h(3), 0)
        self.assertEqual(h(1), 1)
        self.assertEqual(h(25), 3)


    def test_h_oracles(self):

        for n in range(1, 10 ** 4 + 1):
            self.assertEqual(h(n), divisor_sum_h(n))
            self.assertEqual(4 * h(n), lattice_count(n))


    @skipUnless(settings.RUN_SLOW, 'divisor sums up to 10^5')
    def test_h_divisor_sum_oracle(self):

        for n in range(10 ** 4 + 1, 10 ** 5 + 1):
            self.assertEqual(h(n), divisor_sum_h(n))


    def test_multiplicativity(self):

        for m, n in coprime_pairs(10 ** 4):
            self.assertEqual(gcd(m, n), 1)
            self.assertTrue(m * n < 2 ** 62)
            fm, fn, fmn = factorize(m), factorize(n), factorize(m * n)
            self.assertEqual(h_of(fmn), h_of(fm) * h_of(fn))
            self.assertEqual(phi_of(fmn), phi_of(fm) * phi_of(fn))
            self.assertEqual(tau_of(fmn), tau_of(fm) * tau_of(fn))
            self.assertEqual(mu_of(fmn), mu_of(fm) * mu_of(fn))


    def test_phi_tau_mu(self):

        self.assertEqual(phi(12), 4)
        self.assertEqual(tau(12), 6)
        self.assertEqual(mu(30), -1)
        self.assertEqual(mu(12), 0)
        self.assertEqual(omega_of(factorize(360)), 3)


class GeneralizedCrtTest(SimpleTestCase):

    def test_decompose(self):

        self.assertEqual(decompose_delta(6, 4, 3), (8, 9))
        self.assertEqual(decompose_delta(1, 1, 1), (1, 1))
        self.assertEqual(decompose_delta(12, 1, 1), (12, 1))


    def test_decompose_bad_shape(self):

        self.assertRaises(BadShape, decompose_delta, 6, 2, 4)
        self.assertRaises(BadShape, decompose_delta, 6, 5, 1)


    def test_lambda(self):

        system = CrtSystem(6, 4, 3, 5, 11)
        self.assertEqual(lemma9_lambda(system), 29)
        self.assertEqual(29 % 24, 5)
        self.assertEqual(29 % 18, 11)
        self.assertIs(lemma9_lambda(system.with_residues(5, 6)), NoSolution)
        self.assertFalse(NoSolution)
        self.assertEqual(lemma9_lambda(CrtSystem(1, 1, 1)), 0)
