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

""" Unit tests for Dirichlet characters and their products with chi4.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import cmath
from fractions import Fraction

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.arith import chi4, h, phi
from two_squares_ratio.characters import *
from two_squares_ratio.exceptions import (
    ModulusTooLarge, NotPrimitive, PreconditionViolated, RangeTooLarge)
from two_squares_ratio.lemmas import conductor_table


def primitive_characters(modulus):
    return [c for c in enumerate_characters(modulus) if c.is_primitive()]


class EnumerationTest(SimpleTestCase):

    def test_counts(self):

        self.assertEqual(len(enumerate_characters(5)), 4)
        self.assertEqual(len(enumerate_characters(1)), 1)
        for q in (8, 12, 15, 16, 49, 60):
            self.assertEqual(len(enumerate_characters(q)), phi(q))


    def test_modulus_four(self):

        characters = enumerate_characters(4)
        self.assertEqual(len(characters), 2)
        self.assertTrue(characters[0].is_principal)
        for n in range(20):
            self.assertEqual(characters[1](n), chi4(n))


    def test_modulus_one(self):

        character = enumerate_characters(1)[0]
        for n in range(5):
            self.assertEqual(character(n), 1)


    def test_distinct_and_orthogonal(self):

        characters = enumerate_characters(15)
        self.assertEqual(len(set(characters)), 8)
        for character in characters:
            total = sum(character.values())
            expected = phi(15) if character.is_principal else 0
            self.assertAlmostEqual(abs(total - expected), 0, places = 12)


    def test_multiplicative(self):

        for character in enumerate_characters(21):
            for m in range(1, 21):
                for n in range(1, 21):
                    self.assertTrue(cmath.isclose(character(m * n),
                        character(m) * character(n), abs_tol = 1e-12))


    def test_exact_angles(self):

        character = enumerate_characters(5)[1]
        self.assertIsInstance(character.angle(2), Fraction)
        self.assertIsNone(character.angle(10))
        self.assertEqual(character(5), 0)


    def test_too_large(self):

        self.assertRaises(ModulusTooLarge, enumerate_characters,
            settings.MAX_MODULUS + 1)


class ConductorTest(SimpleTestCase):

    def test_conductors(self):

        self.assertEqual(principal_character(12).conductor(), 1)
        chi4_mod_12 = DirichletCharacter.from_angles(12, chi4_character().angle)
        self.assertEqual(chi4_mod_12.conductor(), 4)
        legendre = [c for c in enumerate_characters(7) if c.order == 2][0]
        self.assertEqual(legendre.conductor(), 7)
        self.assertTrue(legendre.is_primitive())


    def test_primitive_inducer(self):

        character = enumerate_characters(20)[3]
        inducer = character.primitive()
        self.assertEqual(inducer.modulus, character.conductor())
        for n in range(1, 60):
            if n % 2 and n % 5:
                self.assertTrue(cmath.isclose(inducer(n), character(n),
                    abs_tol = 1e-12))


    def test_no_primitive_modulo_two_mod_four(self):

        self.assertEqual(primitive_characters(6), [])
        self.assertEqual(primitive_characters(10), [])


class TimesChi4Test(SimpleTestCase):

    def test_odd(self):

        legendre = primitive_characters(3)[0]
        _, conductor = times_chi4(legendre)
        self.assertEqual(conductor, 12)
        self.assertEqual(expected_conductor_times_chi4(3), 12)


    def test_four_exactly_divides(self):

        for character in primitive_characters(12):
            self.assertEqual(times_chi4(character)[1], 3)


    def test_eight_divides(self):

        for character in primitive_characters(16):
            self.assertEqual(times_chi4(character)[1], 16)


    def test_errors(self):

        self.assertRaises(NotPrimitive, times_chi4, principal_character(5))
        self.assertRaises(PreconditionViolated, times_chi4,
            enumerate_characters(1)[0])
        self.assertRaises(NotPrimitive, expected_conductor_times_chi4, 6)


    def test_table(self):

        limit = 300 if settings.RUN_SLOW else 60
        checked, failures = conductor_table(limit)
        self.assertGreater(checked, 0)
        self.assertEqual(failures, [])


class CharacterSumTest(SimpleTestCase):

    def test_principal_modulo_one(self):

        self.assertEqual(char_h_sum(principal_character(1), 10), complex(6.0, 0))


    def test_empty(self):

        self.assertEqual(char_h_sum(enumerate_characters(5)[1], 0), 0)


    def test_chi4(self):

        self.assertEqual(char_h_sum(chi4_character(), 2), complex(1.0, 0))


    def test_oracle(self):

        character = enumerate_characters(5)[1]
        expected = 0
        for n in range(1, 501):
            value = h(n)
            if value:
                expected += character(n) / value
        self.assertTrue(cmath.isclose(char_h_sum(character, 500), expected,
            abs_tol = 1e-10))


    def test_limit(self):

        self.assertRaises(RangeTooLarge, char_h_sum, chi4_character(),
            settings.CHARACTER_SUM_LIMIT + 1)
