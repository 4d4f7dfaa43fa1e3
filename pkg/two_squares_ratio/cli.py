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

""" Command line front end: one subcommand per experiment, each emitting a
    JSON document or CSV rows.

    Exit codes: 0 on success, 2 when parameters fail validation, 1 on any
    other failure (including failed verification suites and golden
    mismatches).
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import argparse
import csv
import datetime
import io
import logging
import math
import sys
from fractions import Fraction

# Two Squares Ratio Lab
from . import VERSION
from .conf import settings
from . import constants, dispersion, lemmas, mainterm, series, smooth
from .exceptions import ImproperlyConfigured, RatioLabError
from .golden import dumps, golden_compare, write_golden
from .sieve import dump_table, sieve


LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2

VERBOSITY_LEVELS = (logging.ERROR, logging.WARNING, logging.INFO,
    logging.DEBUG)


def number(text):
    """ Parses '1e7', '100000' or '2.5' into an int when integral. """
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError('not a number: %r' % text)
    if value.is_integer() and abs(value) < 2 ** 63:
        return int(value)
    return value


def number_list(text):
    return [number(part) for part in text.split(',') if part.strip()]


class RunConfig(object):
    """ Validated parameters of one command line run. Missing values fall
        back to the ``DEFAULT_*`` attributes; :meth:`_ensure_parameters`
        raises :class:`ImproperlyConfigured` for values that cannot be used.
    """
    # Subcommands.
    COMMAND_CONSTANTS = 'constants'
    COMMAND_QSUM = 'qsum'
    COMMAND_QTABLE = 'qtable'
    COMMAND_DECOMPOSE = 'decompose'
    COMMAND_QERR2 = 'qerr2'
    COMMAND_SMOOTH = 'smooth'
    COMMAND_VERIFY = 'verify'
    COMMAND_DISPERSION = 'dispersion'
    COMMAND_SIEVE_DUMP = 'sieve-dump'
    COMMANDS = (COMMAND_CONSTANTS, COMMAND_QSUM, COMMAND_QTABLE,
        COMMAND_DECOMPOSE, COMMAND_QERR2, COMMAND_SMOOTH, COMMAND_VERIFY,
        COMMAND_DISPERSION, COMMAND_SIEVE_DUMP)

    # Output formats.
    FORMAT_JSON = 'json'
    FORMAT_CSV = 'csv'
    FORMATS = (FORMAT_JSON, FORMAT_CSV)
    DEFAULT_FORMAT = FORMAT_JSON

    # Verification suites.
    SUITES = ('lemma9', 'lemma10', 'lemma10_5', 'lemma11', 'conductors',
        'kloosterman', 'trilinear', 'inequality', 'all')
    DEFAULT_SUITE = 'all'

    DEFAULT_X = 10 ** 4
    DEFAULT_A = 1.0
    DEFAULT_XS = (10 ** 4, 10 ** 5, 10 ** 6)
    DEFAULT_DELTA = 0.1
    DEFAULT_T = 100.0
    DEFAULT_U = 1.0
    DEFAULT_LAMBDAS = (0.5, 1, 10, 100, 400)

    # Parameters that fall back to the settings module.
    SETTINGS_DEFAULTS = {'threads': 'THREADS', 'seed': 'SEED'}


    def __init__(self, command, **parameters):
        self.command = command
        self.parameters = dict((key, value) for key, value in
            parameters.items() if not value is None)


    def __getattr__(self, name):
        parameters = self.__dict__.get('parameters', {})
        if name in parameters:
            return parameters[name]
        if name in self.SETTINGS_DEFAULTS:
            return getattr(settings, self.SETTINGS_DEFAULTS[name])
        default = 'DEFAULT_%s' % name.upper()
        if hasattr(type(self), default):
            return getattr(type(self), default)
        raise AttributeError(name)


    @classmethod
    def from_arguments(cls, arguments):
        values = vars(arguments).copy()
        command = values.pop('command')
        return cls(command, **values)


    def _ensure_parameters(self):
        """ Verifies the parameters the chosen subcommand reads. """
        if not self.command in self.COMMANDS:
            raise ImproperlyConfigured('unknown subcommand %r' % self.command)
        if not self.format in self.FORMATS:
            raise ImproperlyConfigured('format must be one of %s' %
                ', '.join(self.FORMATS))
        threads = self.parameters.get('threads', settings.THREADS)
        if threads < 1:
            raise ImproperlyConfigured('thread count must be positive')
        if self.command in (self.COMMAND_QSUM, self.COMMAND_DECOMPOSE,
                self.COMMAND_QERR2):
            if not isinstance(self.x, int) or self.x < 1:
                raise ImproperlyConfigured('x must be a positive integer')
        if self.command in (self.COMMAND_DECOMPOSE, self.COMMAND_QERR2) and \
                self.A <= 0:
            raise ImproperlyConfigured('A must be positive')
        if self.command == self.COMMAND_QTABLE:
            if not self.xs or any(not isinstance(x, int) or x < 1
                    for x in self.xs):
                raise ImproperlyConfigured('xs must be positive integers')
        if self.command == self.COMMAND_VERIFY and \
                not self.suite in self.SUITES:
            raise ImproperlyConfigured('suite must be one of %s' %
                ', '.join(self.SUITES))
        if self.command == self.COMMAND_SMOOTH and not 0 < self.delta < 0.5:
            raise ImproperlyConfigured('delta must lie in (0, 1/2)')
        if self.command == self.COMMAND_SIEVE_DUMP:
            if self.parameters.get('output') is None:
                raise ImproperlyConfigured('sieve-dump needs --output')
            if self.lo < 1 or self.hi <= self.lo:
                raise ImproperlyConfigured('need 1 <= lo < hi')


    @property
    def record(self):
        """ The parameters echoed into the output document. """
        return dict((key, value) for key, value in
            sorted(self.parameters.items())
            if not key in ('output', 'golden', 'write_golden', 'verbosity',
                'threads'))


def _constants(config):
    return constants.constants_report(config.parameters.get('prime_limit'))


def _qsum(config):
    if config.parameters.get('exact'):
        result = series.q_of_x(config.x, exact = True)
        return {'x': config.x, 'Q': result.value,
            'Q_exact': '%d/%d' % (result.exact.numerator,
                result.exact.denominator),
            'normalized': result.normalized, 'terms': result.terms_used}
    result = series.q_of_x(config.x, threads = config.threads)
    tau = series.s_of_x(config.x, threads = config.threads)
    return {'x': config.x, 'Q': result.value, 'normalized': result.normalized,
        'terms': result.terms_used, 'S': tau.value}


def _qtable(config):
    if config.parameters.get('with_mt'):
        return [report.as_row() for report in mainterm.main_term_table(
            config.xs, config.parameters.get('prime_limit'), config.threads)]
    rows = []
    for x in config.xs:
        result = series.q_of_x(x, threads = config.threads)
        rows.append({'x': x, 'Q': result.value,
            'normalized': result.normalized, 'terms': result.terms_used})
    return rows


def _decompose(config):
    parts = series.q_decomposition(config.x, config.A)
    lower, upper = series.split_points(config.x, config.A)
    # exact Q only exists up to EXACT_LIMIT; above it check against float mode
    exact = config.x <= settings.EXACT_LIMIT
    if exact:
        match = parts.total == series.q_of_x(config.x, exact = True).exact
    else:
        reference = series.q_of_x(config.x).value
        match = abs(float(parts.total) - reference) <= \
            1e-9 * max(1.0, abs(reference))
    return {'x': config.x, 'A': config.A, 'lower': lower, 'upper': upper,
        'Q1': float(parts.q1), 'Q2': float(parts.q2), 'Q3': float(parts.q3),
        'Q': float(parts.total), 'reference': 'exact' if exact else 'float',
        'match': match}


def _qerr2(config):
    return {'x': config.x, 'A': config.A,
        'value': series.qerr2_direct(config.x, config.A),
        'normalized': series.qerr2_normalized(config.x, config.A)}


def _smooth(config):
    exact, reconstructed, difference = smooth.mellin_inversion_check(
        config.delta, config.T, config.u)
    coprime, ratio = smooth.poisson_check_coprime(2, 100)
    values = []
    for frequency in config.lambdas:
        value = smooth.psi_hat(frequency).value
        values.append({'lambda': frequency, 're': value.real,
            'im': value.imag,
            'envelope': abs(value) * math.exp(math.sqrt(abs(frequency)) / 2)})
    return {
        'rho_integral': smooth.rho_integral(),
        'psi_hat': values,
        'mellin': {'delta': config.delta, 'T': config.T, 'u': config.u,
            'exact': exact, 'reconstructed': reconstructed,
            'difference': difference},
        'poisson_coprime': {'q': 2, 'M': 100, 'diff': coprime.diff,
            'ratio': ratio},
    }


def _suite_lemma9():
    shapes, failures = lemmas.lemma9_exhaustive()
    return {'checked': shapes, 'failures': len(failures)}


def _suite_lemma10():
    failures = lemmas.lemma10_sweep()
    return {'checked': 10 ** 4, 'failures': len(failures)}


def _suite_lemma10_5():
    error = lemmas.lemma10_5_verify(lambda z: z ** 3 / (1 + z), 3, 1.5, 0.7,
        2.0)
    return {'checked': 7, 'failures': int(error > 1e-6),
        'max_relative_error': error}


def _suite_lemma11():
    cases = (
        (1, [3, -1, 4, 1, -5], lambda x: x ** 2 / 10, (0, ), (5, )),
        (2, [[1, 2], [-3, 1]], lambda x, y: x * y + y ** 2, (0, 0), (2, 2)),
        (3, [[[1, 0], [2, -1]], [[0, 3], [1, 1]]],
            lambda x, y, z: x + y * z, (1, 1, 1), (3, 3, 3)),
    )
    errors = [lemmas.lemma11_verify(*case) for case in cases]
    return {'checked': len(errors), 'failures': sum(1 for e in errors
        if e > 1e-8), 'max_abs_error': max(errors)}


def _suite_conductors():
    checked, failures = lemmas.conductor_table()
    return {'checked': checked, 'failures': len(failures)}


def _suite_kloosterman():
    worst = lemmas.weil_bound_check()
    return {'checked': 199, 'failures': int(worst > 1 + 1e-9),
        'max_ratio': worst}


def _suite_trilinear():
    ratios = lemmas.trilinear_sweep()
    # Report-only: the bound carries an unspecified constant.
    return {'checked': len(ratios), 'failures': 0, 'max_ratio': max(ratios)}


def _suite_inequality():
    results = dispersion.inequality_sweep()
    return {'checked': len(results),
        'failures': sum(1 for _, check in results if not check.ok)}


SUITES = {
    'lemma9': _suite_lemma9,
    'lemma10': _suite_lemma10,
    'lemma10_5': _suite_lemma10_5,
    'lemma11': _suite_lemma11,
    'conductors': _suite_conductors,
    'kloosterman': _suite_kloosterman,
    'trilinear': _suite_trilinear,
    'inequality': _suite_inequality,
}


def _verify(config):
    names = sorted(SUITES) if config.suite == 'all' else [config.suite]
    results = {}
    for name in names:
        LOGGER.info("running suite %s", name)
        results[name] = SUITES[name]()
    return {'suites': results,
        'passed': all(r['failures'] == 0 for r in results.values())}


def _dispersion(config):
    params = dispersion.DispersionParams(
        D = config.D, N = config.N, M = config.M,
        t = config.parameters.get('t', 0.0),
        k = config.parameters.get('k', 1),
        j1 = config.parameters.get('j1', 2),
        j2 = config.parameters.get('j2', 16),
        x_cap = config.parameters.get('x_cap'))
    return dispersion.dispersion_report(params, config.parameters.get('X'))


def _sieve_dump(config):
    channel = config.parameters.get('channel', 'h')
    table = sieve(config.lo, config.hi, tau = channel == 'tau',
        threads = config.threads)
    with open(config.output, 'wb') as stream:
        dump_table(table, stream, '%s_values' % channel)
    return {'lo': config.lo, 'hi': config.hi, 'channel': channel,
        'path': config.output}


HANDLERS = {
    RunConfig.COMMAND_CONSTANTS: _constants,
    RunConfig.COMMAND_QSUM: _qsum,
    RunConfig.COMMAND_QTABLE: _qtable,
    RunConfig.COMMAND_DECOMPOSE: _decompose,
    RunConfig.COMMAND_QERR2: _qerr2,
    RunConfig.COMMAND_SMOOTH: _smooth,
    RunConfig.COMMAND_VERIFY: _verify,
    RunConfig.COMMAND_DISPERSION: _dispersion,
    RunConfig.COMMAND_SIEVE_DUMP: _sieve_dump,
}


def _format_cell(value):
    if isinstance(value, float):
        return '%.17g' % value
    if isinstance(value, Fraction):
        return '%d/%d' % (value.numerator, value.denominator)
    return str(value)


def render_csv(result):
    rows = result if isinstance(result, list) else [result]
    stream = io.StringIO()
    if not rows:
        return ''
    fields = list(rows[0])
    writer = csv.writer(stream, lineterminator = '\n')
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_format_cell(row.get(name, '')) for name in fields])
    return stream.getvalue()


def render_json(config, result):
    return dumps({
        'command': config.command,
        'parameters': config.record,
        'result': result,
        'timestamp': datetime.datetime.now(datetime.timezone.utc).isoformat(),
        'version': '.'.join(str(v) for v in VERSION),
    }) + '\n'


def run(config):
    """ Runs one validated configuration and writes its artifact.

        :returns: the exit code.
    """
    config._ensure_parameters()
    if 'threads' in config.parameters:
        settings.THREADS = config.threads
    if 'seed' in config.parameters:
        settings.SEED = config.seed
    result = HANDLERS[config.command](config)
    if config.command == RunConfig.COMMAND_SIEVE_DUMP:
        text = render_json(config, result)
        sys.stdout.write(text)
        return EXIT_OK
    if config.format == RunConfig.FORMAT_CSV:
        text = render_csv(result)
    else:
        text = render_json(config, result)
    output = config.parameters.get('output')
    if output:
        with open(output, 'w') as stream:
            stream.write(text)
    else:
        sys.stdout.write(text)
    status = EXIT_OK
    if isinstance(result, dict) and result.get('passed') is False:
        status = EXIT_FAILURE
    document = {'parameters': config.record, 'result': result}
    if config.parameters.get('write_golden'):
        write_golden(config.write_golden, document)
    if config.parameters.get('golden'):
        report = golden_compare(config.golden, document)
        for name, expected, actual, tolerance in report.failures:
            LOGGER.error("golden mismatch in %s: expected %r, got %r "
                "(tolerance %r)", name, expected, actual, tolerance)
        if not report.passed:
            status = EXIT_FAILURE
    return status


def build_parser():
    parser = argparse.ArgumentParser(prog = 'tsrl',
        description = 'Sum-of-two-squares ratio experiments.')
    parser.add_argument('--verbosity', type = int, default = 1,
        choices = range(len(VERBOSITY_LEVELS)))
    parser.add_argument('--threads', type = int)
    parser.add_argument('--seed', type = int)
    parser.add_argument('--format', choices = RunConfig.FORMATS)
    parser.add_argument('--output')
    parser.add_argument('--golden', help = 'compare against a golden file')
    parser.add_argument('--write-golden', dest = 'write_golden')
    commands = parser.add_subparsers(dest = 'command', required = True)

    command = commands.add_parser(RunConfig.COMMAND_CONSTANTS)
    command.add_argument('--prime-limit', dest = 'prime_limit', type = number)

    command = commands.add_parser(RunConfig.COMMAND_QSUM)
    command.add_argument('--x', type = number)
    command.add_argument('--exact', action = 'store_true')

    command = commands.add_parser(RunConfig.COMMAND_QTABLE)
    command.add_argument('--xs', type = number_list)
    command.add_argument('--with-mt', dest = 'with_mt', action = 'store_true')
    command.add_argument('--prime-limit', dest = 'prime_limit', type = number)

    for name in (RunConfig.COMMAND_DECOMPOSE, RunConfig.COMMAND_QERR2):
        command = commands.add_parser(name)
        command.add_argument('--x', type = number)
        command.add_argument('--A', type = float)

    command = commands.add_parser(RunConfig.COMMAND_SMOOTH)
    command.add_argument('--delta', type = float)
    command.add_argument('--T', type = float)
    command.add_argument('--u', type = float)
    command.add_argument('--lambdas', type = number_list)

    command = commands.add_parser(RunConfig.COMMAND_VERIFY)
    command.add_argument('--suite', choices = RunConfig.SUITES)

    command = commands.add_parser(RunConfig.COMMAND_DISPERSION)
    for name in ('D', 'N', 'M'):
        command.add_argument('--%s' % name, type = number, required = True)
    command.add_argument('--t', type = float)
    command.add_argument('--k', type = int)
    command.add_argument('--j1', type = number)
    command.add_argument('--j2', type = number)
    command.add_argument('--x-cap', dest = 'x_cap', type = int)
    command.add_argument('--X', type = number)

    command = commands.add_parser(RunConfig.COMMAND_SIEVE_DUMP)
    command.add_argument('--lo', type = number, required = True)
    command.add_argument('--hi', type = number, required = True)
    command.add_argument('--channel', choices = ('h', 'tau'))
    return parser


def main(argv = None):
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(level = VERBOSITY_LEVELS[arguments.verbosity],
        format = '%(asctime)s %(name)s %(levelname)s %(message)s')
    config = RunConfig.from_arguments(arguments)
    try:
        return run(config)
    except RatioLabError as e:
        LOGGER.error("invalid parameters: %s", e)
        return EXIT_INVALID
    except Exception:
        LOGGER.exception("run failed")
        return EXIT_FAILURE
