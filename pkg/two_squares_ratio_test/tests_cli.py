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

""" Tests for the command line front end.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import csv
import json
import os
import shutil
import tempfile
from unittest import skipUnless

# Django
from django.test import SimpleTestCase, override_settings

# Two Squares Ratio Lab
from two_squares_ratio.conf import settings
from two_squares_ratio.exceptions import ImproperlyConfigured
from two_squares_ratio.sieve import load_table
from two_squares_ratio.cli import *


class ParsingTest(SimpleTestCase):

    def test_numbers(self):

        self.assertEqual(number('1e7'), 10 ** 7)
        self.assertEqual(number('2.5'), 2.5)
        self.assertEqual(number_list('10,1e3, 5'), [10, 1000, 5])


    def test_defaults(self):

        config = RunConfig(RunConfig.COMMAND_QSUM)
        self.assertEqual(config.x, RunConfig.DEFAULT_X)
        self.assertEqual(config.format, RunConfig.FORMAT_JSON)
        self.assertEqual(config.threads, settings.THREADS)
        self.assertRaises(AttributeError, getattr, config, 'nothing')


    def test_validation(self):

        self.assertRaises(ImproperlyConfigured,
            RunConfig('unknown')._ensure_parameters)
        self.assertRaises(ImproperlyConfigured,
            RunConfig(RunConfig.COMMAND_QSUM, x = 2.5)._ensure_parameters)
        self.assertRaises(ImproperlyConfigured,
            RunConfig(RunConfig.COMMAND_SMOOTH, delta = 0.7)._ensure_parameters)


    def test_record(self):

        config = RunConfig(RunConfig.COMMAND_QSUM, x = 10, threads = 4,
            output = 'out.json', verbosity = 2)
        self.assertEqual(config.record, {'x': 10})


class RunTest(SimpleTestCase):

    def setUp(self):

        self.directory = tempfile.mkdtemp()
        self.saved = settings.THREADS, settings.SEED


    def tearDown(self):

        settings.THREADS, settings.SEED = self.saved
        shutil.rmtree(self.directory)


    def path(self, name):

        return os.path.join(self.directory, name)


    def document(self, name):

        with open(self.path(name)) as stream:
            return json.load(stream)


    def test_qsum(self):

        self.assertEqual(main(['--output', self.path('q.json'), 'qsum',
            '--x', '10', '--exact']), EXIT_OK)
        document = self.document('q.json')
        self.assertEqual(document['command'], 'qsum')
        self.assertEqual(document['result']['Q_exact'], '3/1')
        self.assertEqual(document['parameters'], {'exact': True, 'x': 10})


    def test_invalid(self):

        self.assertEqual(main(['qsum', '--x', '0']), EXIT_INVALID)
        self.assertEqual(main(['--threads', '0', 'qsum']), EXIT_INVALID)
        self.assertEqual(main(['sieve-dump', '--lo', '1', '--hi', '10']),
            EXIT_INVALID)
        self.assertEqual(main(['--output', self.path('d.json'), 'dispersion',
            '--D', '8', '--N', '32', '--M', '16']), EXIT_INVALID)


    def test_csv(self):

        self.assertEqual(main(['--format', 'csv', '--output',
            self.path('table.csv'), 'qtable', '--xs', '10,100']), EXIT_OK)
        with open(self.path('table.csv')) as stream:
            rows = list(csv.DictReader(stream))
        self.assertEqual([row['x'] for row in rows], ['10', '100'])
        self.assertEqual(float(rows[0]['Q']), 3.0)


    def test_thread_count_independent(self):

        for threads in ('1', '3'):
            self.assertEqual(main(['--threads', threads, '--output',
                self.path('t%s.json' % threads), 'qtable', '--xs',
                '20000,30000']), EXIT_OK)
        self.assertEqual(self.document('t1.json')['result'],
            self.document('t3.json')['result'])
        self.assertEqual(self.document('t1.json')['parameters'],
            self.document('t3.json')['parameters'])


    def test_verify(self):

        for suite in ('lemma10_5', 'lemma11'):
            self.assertEqual(main(['--output', self.path('v.json'), 'verify',
                '--suite', suite]), EXIT_OK)
            document = self.document('v.json')
            self.assertTrue(document['result']['passed'])
            self.assertEqual(document['result']['suites'][suite]['failures'],
                0)


    def test_golden(self):

        arguments = ['--output', self.path('q.json'), '--write-golden',
            self.path('golden.json'), 'qsum', '--x', '100']
        self.assertEqual(main(arguments), EXIT_OK)
        arguments = ['--output', self.path('q.json'), '--golden',
            self.path('golden.json'), 'qsum', '--x', '100']
        self.assertEqual(main(arguments), EXIT_OK)
        golden = self.document('golden.json')
        golden['data']['result']['terms'] += 1
        with open(self.path('golden.json'), 'w') as stream:
            json.dump(golden, stream)
        self.assertEqual(main(arguments), EXIT_FAILURE)


    def test_sieve_dump(self):

        self.assertEqual(main(['--output', self.path('h.bin'), 'sieve-dump',
            '--lo', '1', '--hi', '11']), EXIT_OK)
        with open(self.path('h.bin'), 'rb') as stream:
            table = load_table(stream)
        self.assertEqual((table.lo, table.hi), (1, 11))
        self.assertEqual(list(table.h_values), [1, 1, 0, 1, 2, 0, 0, 1, 1, 2])


    def test_decompose(self):

        self.assertEqual(main(['--output', self.path('d.json'), 'decompose',
            '--x', '500', '--A', '1']), EXIT_OK)
        result = self.document('d.json')['result']
        self.assertEqual(result['reference'], 'exact')
        self.assertTrue(result['match'])
        self.assertAlmostEqual(result['Q1'] + result['Q2'] + result['Q3'],
            result['Q'], delta = 1e-9)


    @override_settings(TSRL_EXACT_LIMIT = 1000)
    def test_decompose_above_exact_limit(self):

        self.assertEqual(main(['--output', self.path('d.json'), 'decompose',
            '--x', '5000', '--A', '1']), EXIT_OK)
        result = self.document('d.json')['result']
        self.assertEqual(result['reference'], 'float')
        self.assertTrue(result['match'])


    @skipUnless(settings.RUN_SLOW, 'full-size thread comparison')
    def test_thread_count_independent_full(self):

        for threads in ('1', '8'):
            self.assertEqual(main(['--threads', threads, '--output',
                self.path('t%s.json' % threads), 'qtable', '--xs',
                '1000000']), EXIT_OK)
        self.assertEqual(self.document('t1.json')['result'],
            self.document('t8.json')['result'])
