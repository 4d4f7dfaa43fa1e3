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

""" Unit tests for the segmented sieve.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import io

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.arith import factorize, h, h_of, phi, tau_of
from two_squares_ratio.exceptions import RangeTooLarge
from two_squares_ratio.sieve import *


class PrimesTest(SimpleTestCase):

    def test_small(self):

        self.assertEqual(list(primes_upto(10)), [2, 3, 5, 7])
        self.assertEqual(list(primes_upto(2)), [2])
        self.assertEqual(len(primes_upto(100)), 25)
        self.assertEqual(len(primes_upto(1)), 0)


    def test_segmented(self):

        primes = primes_upto(10 ** 5, segment_size = 1000)
        self.assertEqual(len(primes), 9592)
        self.assertEqual(list(primes), list(primes_upto(10 ** 5,
            segment_size = 10 ** 6)))


    def test_limit(self):

        self.assertRaises(RangeTooLarge, primes_upto, settings.SIEVE_LIMIT + 1)


class SieveTest(SimpleTestCase):

    def test_h_values(self):

        self.assertEqual(list(sieve_h(1, 11).h_values),
            [1, 1, 0, 1, 2, 0, 0, 1, 1, 2])
        self.assertEqual(list(sieve_h(1, 2).h_values), [1])


    def test_tau_values(self):

        self.assertEqual(list(sieve_tau(1, 7).tau_values), [1, 2, 2, 3, 2, 4])
        self.assertEqual(list(sieve_tau(12, 13).tau_values), [6])


    def test_oracle_equivalence(self):

        lo, hi = 10 ** 6, 10 ** 6 + 10 ** 3
        table = sieve(lo, hi, tau = True, density = True, segment_size = 256)
        for n in range(lo, hi):
            f = factorize(n)
            self.assertEqual(table.h(n), h_of(f))
            self.assertEqual(table.tau(n), tau_of(f))


    def test_density(self):

        table = sieve(1, 16, density = True)
        self.assertAlmostEqual(table.density(5), 16 / 21, places = 15)
        self.assertAlmostEqual(table.density(3), 8 / 5, places = 15)
        self.assertAlmostEqual(table.density(15), 16 / 21 * 8 / 5, places = 15)
        self.assertEqual(table.density(8), 1.0)


    def test_segments_agree(self):

        whole = sieve_h(1, 5000, segment_size = 10 ** 6).h_values
        pieces = sieve_h(1, 5000, segment_size = 97).h_values
        self.assertEqual(list(whole), list(pieces))


    def test_read_only(self):

        table = sieve_h(1, 100)
        self.assertRaises(ValueError, table.h_values.__setitem__, 0, 5)
        self.assertRaises(IndexError, table.h, 100)


    def test_bad_ranges(self):

        self.assertRaises(RangeTooLarge, sieve, 0, 10)
        self.assertRaises(RangeTooLarge, sieve, 10, 10)
        self.assertRaises(RangeTooLarge, sieve, 1, settings.SIEVE_LIMIT + 10)


    def test_threads(self):

        single = sieve_h(1, 20000, segment_size = 1000, threads = 1).h_values
        pooled = sieve_h(1, 20000, segment_size = 1000, threads = 2).h_values
        self.assertEqual(list(single), list(pooled))


class TableDumpTest(SimpleTestCase):

    def test_dump_and_load(self):

        table = sieve_h(100, 200)
        stream = io.BytesIO()
        dump_table(table, stream)
        self.assertEqual(len(stream.getvalue()), 16 + 4 * 100)
        stream.seek(0)
        loaded = load_table(stream)
        self.assertEqual((loaded.lo, loaded.hi), (100, 200))
        self.assertEqual(loaded.h(125), h(125))


class TotientTest(SimpleTestCase):

    def test_totients(self):

        values = totients(100)
        self.assertEqual(values[0], 0)
        for n in range(1, 101):
            self.assertEqual(values[n], phi(n))
