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

""" The main-term pipeline: the local density E(n), the weighted sums H(x)
    and H1(x), the main term Q^MT(x), the asymptotic for H(x) and the
    comparison against the exact ratio sum.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

# Numerical
import numpy

# Two Squares Ratio Lab
from .conf import settings
from .arith import chi4, factorize
from .constants import g_one, gamma_quarter, pi_c_over_four
from .exceptions import PreconditionViolated, RangeTooLarge
from .series import CHANNEL_H, CHANNEL_H_ODD, CHANNEL_Q, checkpoint_sums
from .sieve import sieve_h, totients


LOGGER = logging.getLogger(__name__)


def E_of(f):
    """ E(n) over the distinct primes of n: (p-1)^2/(p^2-p+1) for
        p = 1 (mod 4), (p^2-1)/(p^2-p-1) for p = 3 (mod 4), 1 for p = 2.
    """
    value = Fraction(1)
    for p in f.primes:
        if p % 4 == 1:
            value *= Fraction((p - 1) ** 2, p * p - p + 1)
        elif p % 4 == 3:
            value *= Fraction(p * p - 1, p * p - p - 1)
    return value


def E(n):
    return E_of(factorize(n))


def euler_factor_checks(limit):
    """ Exact checks up to `limit`: E(2l) = E(l), and at every odd prime the
        c-factor times E(p) equals 1 - 1/p (p = 1 mod 4) or 1 + 1/p
        (p = 3 mod 4).

        :returns: the failing arguments.
    """
    failures = []
    for l in range(1, limit + 1):
        if E(2 * l) != E(l):
            failures.append(('E(2l)', l))
        f = factorize(l)
        if l > 2 and f.factors == ((l, 1), ):
            c_factor = 1 + Fraction(chi4(l), l * (l - 1))
            expected = 1 - Fraction(chi4(l), l)
            if c_factor * E_of(f) != expected:
                failures.append(('c E(p)', l))
    return failures


def H_of(x, odd_only = False, threads = None):
    """ The sum of E(n)/h(n) over n <= floor(x) with h(n) != 0, over odd n
        when `odd_only` is set; zero for x < 1.

        :raises RangeTooLarge: above ``settings.SIEVE_LIMIT``.
    """
    channel = CHANNEL_H_ODD if odd_only else CHANNEL_H
    return checkpoint_sums([x], [channel], threads)[channel][0][0]


def h_one_of(x, threads = None):
    return H_of(x, True, threads)


def q_mt(x, prime_limit = None, threads = None):
    """ (pi c / 4) (H(x) + H(x/2) - 2 H(x/4)), H taken at floors. """
    sums = checkpoint_sums([x, x / 2, x / 4], [CHANNEL_H], threads)[CHANNEL_H]
    combination = sums[0][0] + sums[1][0] - 2 * sums[2][0]
    return pi_c_over_four(prime_limit).value * combination


def h_asymptotic(x, prime_limit = None):
    """ G(1)/Gamma(1/4) * x / (ln x)^(3/4). """
    if x < 3:
        raise PreconditionViolated('asymptotic needs x >= 3')
    return g_one(prime_limit).value / float(gamma_quarter()) * \
        x / math.log(x) ** 0.75


def _chi4_over_phi(y):
    d = numpy.arange(y + 1, dtype = numpy.int64)
    phi = totients(y).astype(numpy.float64)
    signs = numpy.where(d % 4 == 1, 1.0, numpy.where(d % 4 == 3, -1.0, 0.0))
    values = numpy.zeros(y + 1, dtype = numpy.float64)
    values[1:] = signs[1:] / phi[1:]
    return values


def local_density_sum(n, y):
    """ The sum of chi4(d)/phi(d) over d <= y coprime to n; tends to
        (pi c / 4) E(n) as y grows.
    """
    y = int(y)
    if y > settings.CHARACTER_SUM_LIMIT:
        raise RangeTooLarge('local density limited to y <= %d' %
            settings.CHARACTER_SUM_LIMIT)
    if y < 1:
        return 0.0
    values = _chi4_over_phi(y)
    d = numpy.arange(y + 1, dtype = numpy.int64)
    return math.fsum(values[numpy.gcd(d, n) == 1])


def q_mt_direct(x, A = 1.0):
    """ The sum of (1/h(n)) * local_density_sum(n, sqrt(x) (ln x)^A) over
        n <= x with h(n) != 0.
    """
    if x > settings.EXACT_LIMIT:
        raise RangeTooLarge('direct main term limited to x <= %d' %
            settings.EXACT_LIMIT)
    if x < 1:
        return 0.0
    L = math.log(x)
    y = int(math.floor(math.sqrt(x) * L ** A)) if L else 1
    values = _chi4_over_phi(y)
    multiples = {}

    def multiple_sum(e):
        if not e in multiples:
            multiples[e] = math.fsum(values[e::e])
        return multiples[e]

    h_values = sieve_h(1, x + 1).h_values
    terms = []
    for n in range(1, x + 1):
        h = int(h_values[n - 1])
        if not h:
            continue
        primes = [p for p in factorize(n).primes if p != 2]
        inner = 0.0
        for mask in range(1 << len(primes)):
            e, sign = 1, 1
            for bit, p in enumerate(primes):
                if mask >> bit & 1:
                    e *= p
                    sign = -sign
            inner += sign * multiple_sum(e)
        terms.append(inner / h)
    return math.fsum(terms)


@dataclass(frozen = True)
class MainTermReport(object):
    """ One row of the main-term comparison; `q_mt_lo` and `q_mt_hi` carry
        the interval of pi c / 4 through.
    """
    x: int
    Q: float
    H: float
    H_half: float
    H_quarter: float
    q_mt: float
    q_mt_lo: float
    q_mt_hi: float
    h_asymptotic: float


    @property
    def ratio(self):
        return self.Q / self.q_mt if self.q_mt else float('nan')


    @property
    def ratio_H(self):
        return self.H / self.h_asymptotic if self.h_asymptotic \
            else float('nan')


    def as_row(self):
        return {
            'x': self.x, 'Q': self.Q, 'Q_MT': self.q_mt,
            'ratio': self.ratio, 'H': self.H, 'H_asym': self.h_asymptotic,
            'ratio_H': self.ratio_H,
        }


CSV_FIELDS = ('x', 'Q', 'Q_MT', 'ratio', 'H', 'H_asym', 'ratio_H')


def main_term_table(xs, prime_limit = None, threads = None):
    """ A :class:`MainTermReport` per x, all from one segmented pass. """
    xs = [int(x) for x in xs]
    if not xs:
        return []
    cuts = []
    for x in xs:
        cuts.extend((x, x / 2, x / 4))
    sums = checkpoint_sums(cuts, [CHANNEL_Q, CHANNEL_H], threads)
    factor = pi_c_over_four(prime_limit)
    low, high = factor.interval
    g = g_one(prime_limit).value / float(gamma_quarter())
    reports = []
    for index, x in enumerate(xs):
        H, H_half, H_quarter = (sums[CHANNEL_H][3 * index + j][0]
            for j in range(3))
        combination = H + H_half - 2 * H_quarter
        reports.append(MainTermReport(
            x = x,
            Q = sums[CHANNEL_Q][3 * index][0],
            H = H,
            H_half = H_half,
            H_quarter = H_quarter,
            q_mt = factor.value * combination,
            q_mt_lo = low * combination,
            q_mt_hi = high * combination,
            h_asymptotic = g * x / math.log(x) ** 0.75 if x >= 3
                else float('nan')))
        LOGGER.info("main term at x=%d: ratio %.6f", x, reports[-1].ratio)
    return reports
