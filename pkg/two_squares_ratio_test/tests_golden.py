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

""" Unit tests for golden file comparison.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import os
import shutil
import tempfile

# Django
from django.test import SimpleTestCase

# Two Squares Ratio Lab
from two_squares_ratio.characters import char_h_sum, chi4_character, \
    principal_character
from two_squares_ratio.exceptions import MissingGolden
from two_squares_ratio.lemmas import TrilinearSpec, trilinear_B
from two_squares_ratio.smooth import poisson_check_progression
from two_squares_ratio.golden import *


GOLDEN_DIRECTORY = os.path.join(os.path.dirname(os.path.abspath(__file__)),
    'golden')


RECORD = {
    'result': {'Q': 3.0, 'terms': 6, 'rows': [{'x': 1, 'ratio': 0.5}]},
    'timestamp': '2024-01-01T00:00:00',
}


class FlattenTest(SimpleTestCase):

    def test_names(self):

        self.assertEqual(flatten(RECORD), {'result.Q': 3.0,
            'result.terms': 6, 'result.rows.0.x': 1,
            'result.rows.0.ratio': 0.5})


class CompareTest(SimpleTestCase):

    def setUp(self):

        self.directory = tempfile.mkdtemp()
        self.path = os.path.join(self.directory, 'golden.json')
        write_golden(self.path, RECORD, {'result.Q': 1e-6})


    def tearDown(self):

        shutil.rmtree(self.directory)


    def test_identical(self):

        report = golden_compare(self.path, RECORD)
        self.assertTrue(report.passed)
        self.assertEqual(report.warnings, [])


    def test_within_tolerance(self):

        changed = {'result': dict(RECORD['result'], Q = 3.0 + 1e-7),
            'timestamp': 'later'}
        self.assertTrue(golden_compare(self.path, changed).passed)


    def test_outside_tolerance(self):

        changed = {'result': dict(RECORD['result'], terms = 7)}
        report = golden_compare(self.path, changed)
        self.assertFalse(report.passed)
        self.assertEqual(report.failures, [('result.terms', 6, 7, 0.0)])
        self.assertEqual(report.as_record()['failures'][0]['field'],
            'result.terms')


    def test_missing_field(self):

        changed = {'result': {'Q': 3.0, 'terms': 6}}
        report = golden_compare(self.path, changed)
        self.assertEqual([f[0] for f in report.failures],
            ['result.rows.0.ratio', 'result.rows.0.x'])


    def test_extra_field(self):

        changed = {'result': dict(RECORD['result'], extra = 1)}
        report = golden_compare(self.path, changed)
        self.assertTrue(report.passed)
        self.assertEqual(report.warnings, ['extra field result.extra'])


    def test_nan(self):

        write_golden(self.path, {'value': float('nan')})
        self.assertTrue(golden_compare(self.path,
            {'value': float('nan')}).passed)
        self.assertFalse(golden_compare(self.path, {'value': 1.0}).passed)


    def test_missing_file(self):

        self.assertRaises(MissingGolden, golden_compare,
            os.path.join(self.directory, 'absent.json'), RECORD)


class RecordedGoldenTest(SimpleTestCase):

    def assert_golden(self, name, record):

        report = golden_compare(os.path.join(GOLDEN_DIRECTORY, name), record)
        self.assertEqual(report.failures, [])
        self.assertEqual(report.warnings, [])


    def test_character_sums(self):

        record = {}
        for name, character in (('principal_1', principal_character(1)),
                ('principal_3', principal_character(3)),
                ('chi4', chi4_character())):
            value = char_h_sum(character, 10)
            record[name] = {'N': 10, 're': value.real, 'im': value.imag}
        self.assert_golden('char_h_sum.json', record)


    def test_poisson_envelope(self):

        cases = []
        for q, a, M in ((2, 1, 100), (3, 0, 100), (3, 0, 1000)):
            check = poisson_check_progression(q, a, M)
            cases.append({'q': q, 'a': a, 'M': M, 'diff': check.diff})
        self.assert_golden('poisson_envelope.json', {'cases': cases})


    def test_trilinear(self):

        value, ratio = trilinear_B(TrilinearSpec.constant(1, 3, 1, 1))
        self.assert_golden('trilinear.json', {'M': 1, 'N': 3, 'A': 1,
            'theta': 1, 'value_re': value.real, 'value_im': value.imag,
            'bound_ratio': ratio})
