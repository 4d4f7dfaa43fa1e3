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

""" Golden files: JSON records stored together with the tolerances they are
    compared under.

    A golden file holds ``tolerances`` (field name to absolute tolerance),
    ``default_tolerance`` and the stored ``data``. Nested records are compared
    by dotted field name; the ``timestamp`` field is never compared.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import json
import logging
import math
import os
from dataclasses import dataclass, field

# Two Squares Ratio Lab
from .exceptions import MissingGolden


LOGGER = logging.getLogger(__name__)

IGNORED_FIELDS = ('timestamp', )


def flatten(record, prefix = ''):
    """ Maps nested dictionaries and lists onto dotted field names. """
    items = {}
    if isinstance(record, dict):
        pairs = record.items()
    elif isinstance(record, (list, tuple)):
        pairs = ((str(i), v) for i, v in enumerate(record))
    else:
        return {prefix: record}
    for key, value in pairs:
        name = '%s.%s' % (prefix, key) if prefix else str(key)
        if name.split('.')[-1] in IGNORED_FIELDS:
            continue
        items.update(flatten(value, name))
    return items


def dumps(record):
    """ Deterministic JSON: sorted keys, two-space indentation. """
    return json.dumps(record, sort_keys = True, indent = 2)


def write_golden(path, record, tolerances = None, default_tolerance = 0.0):
    with open(path, 'w') as stream:
        stream.write(dumps({
            'tolerances': dict(tolerances or {}),
            'default_tolerance': default_tolerance,
            'data': record,
        }))
        stream.write('\n')


def load_golden(path):
    if not os.path.exists(path):
        raise MissingGolden('no golden file at %s' % path)
    with open(path) as stream:
        return json.load(stream)


@dataclass
class GoldenReport(object):
    """ Outcome of a comparison; `failures` holds (field, expected, actual,
        tolerance) tuples.
    """
    failures: list = field(default_factory = list)
    warnings: list = field(default_factory = list)


    @property
    def passed(self):
        return not self.failures


    def as_record(self):
        return {
            'passed': self.passed,
            'failures': [{'field': name, 'expected': expected,
                'actual': actual, 'tolerance': tolerance}
                for name, expected, actual, tolerance in self.failures],
            'warnings': list(self.warnings),
        }


def _matches(expected, actual, tolerance):
    if isinstance(expected, bool) or isinstance(actual, bool) or \
            not isinstance(expected, (int, float)) or \
            not isinstance(actual, (int, float)):
        return expected == actual
    if math.isnan(expected) or math.isnan(actual):
        return math.isnan(expected) and math.isnan(actual)
    return abs(expected - actual) <= tolerance


def golden_compare(path, record):
    """ Compares `record` with the golden file at `path` field by field.
        Fields absent from the new record fail; fields only present in the
        new record pass with a warning.

        :raises MissingGolden: when `path` does not exist.
    """
    golden = load_golden(path)
    tolerances = golden.get('tolerances', {})
    default = golden.get('default_tolerance', 0.0)
    expected = flatten(golden.get('data', {}))
    actual = flatten(record)
    report = GoldenReport()
    for name in sorted(expected):
        tolerance = tolerances.get(name, default)
        if not name in actual:
            report.failures.append((name, expected[name], None, tolerance))
        elif not _matches(expected[name], actual[name], tolerance):
            report.failures.append((name, expected[name], actual[name],
                tolerance))
    for name in sorted(set(actual) - set(expected)):
        LOGGER.warning("field %s is not in the golden file %s", name, path)
        report.warnings.append('extra field %s' % name)
    return report
