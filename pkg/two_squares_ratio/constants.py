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

""" Euler-product constants of the h-ratio asymptotics.

    Each product is accumulated in log space: the logarithms of the factors
    are evaluated with ``log1p`` over a numpy prime array and added by
    ``mpmath.fsum`` at ``settings.MP_DPS`` digits, so the rounding of the sum
    stays far below double precision even for millions of primes. The
    exponentiation and the transcendental prefactors also run in mpmath.

    The neglected primes above the limit are covered by an empirical tail
    model: the factor logarithms decay like C/p^2, C is measured on a window
    of primes (times a safety factor) and the tail is bounded by C/(P ln P).
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

# Numerical
import mpmath
import numpy
from mpmath import mp, mpf

# Two Squares Ratio Lab
from .conf import settings
from .exceptions import PreconditionViolated
from .sieve import primes_upto


LOGGER = logging.getLogger(__name__)


@dataclass(frozen = True)
class EulerProductValue(object):
    """ A truncated product together with its tail model.

        :attr:`interval` is ``(partial * exp(-tail), partial * exp(tail))``.
    """
    name: str
    partial: mpf
    prime_limit: int
    tail_bound: float


    @property
    def value(self):
        return float(self.partial)


    @property
    def interval(self):
        spread = mpmath.exp(self.tail_bound)
        return float(self.partial / spread), float(self.partial * spread)


    def as_record(self):
        low, high = self.interval
        return {
            'name': self.name,
            'value': self.value,
            'interval_lo': low,
            'interval_hi': high,
            'prime_limit': self.prime_limit,
        }


@lru_cache(maxsize = 4)
def _primes(prime_limit):
    primes = primes_upto(prime_limit).astype(numpy.float64)
    residues = numpy.mod(primes, 4)
    return primes, primes[residues == 1], primes[residues == 3]


def _check_limit(prime_limit):
    if prime_limit < settings.MIN_PRIME_LIMIT:
        raise PreconditionViolated('prime limit must be at least %d' %
            settings.MIN_PRIME_LIMIT)


def _tail_bound(primes, log_factors, prime_limit):
    low, high = settings.TAIL_WINDOW
    window = (primes >= low) & (primes <= high)
    if not window.any():
        return 0.0
    constant = float(numpy.max(numpy.abs(log_factors[window]) *
        primes[window] ** 2)) * settings.TAIL_SAFETY
    return constant / (prime_limit * math.log(prime_limit))


def _log_sum(log_factors):
    """ Sum of the log factors kept at ``settings.MP_DPS`` digits. """
    with mp.workdps(settings.MP_DPS):
        return mpmath.fsum(log_factors.tolist())


def c1_log_factors(primes):
    """ log of ((p-1)/(p+1))^(1/4) * (1/(p-1) + (p-1) ln(p/(p-1))). """
    inner = -(primes - 1) * numpy.log1p(-1 / primes)
    return 0.25 * (numpy.log1p(-1 / primes) - numpy.log1p(1 / primes)) + \
        numpy.log1p(1 / (primes - 1) + (inner - 1))


def k_log_factors(primes):
    """ log of 1/sqrt(p(p-1)) + sqrt(1-1/p) (p-1) ln(p/(p-1)). """
    inner = -(primes - 1) * numpy.log1p(-1 / primes)
    root = numpy.sqrt(1 - 1 / primes)
    return numpy.log1p(1 / numpy.sqrt(primes * (primes - 1)) +
        (root * inner - 1))


def c_log_factors(primes):
    """ log of 1 + chi4(p)/(p(p-1)), zero at p = 2. """
    signs = numpy.where(numpy.mod(primes, 4) == 1, 1.0,
        numpy.where(numpy.mod(primes, 4) == 3, -1.0, 0.0))
    return numpy.log1p(signs / (primes * (primes - 1)))


def p1_log_factors(primes):
    """ log of (1-1/p)^(1/2) (1 + E(p) (p ln(p/(p-1)) - 1)), p = 1 (mod 4). """
    density = (primes - 1) ** 2 / (primes * primes - primes + 1)
    series = -primes * numpy.log1p(-1 / primes) - 1
    return 0.5 * numpy.log1p(-1 / primes) + numpy.log1p(density * series)


def p3_log_factors(primes):
    """ log of (1-p^-2)^(1/4) (1 + 1/(p^2-p-1)), p = 3 (mod 4). """
    return 0.25 * numpy.log1p(-1 / primes ** 2) + \
        numpy.log1p(1 / (primes * primes - primes - 1))


def _product(name, primes, log_factors, prime_limit, prefactor = 1):
    with mp.workdps(settings.MP_DPS):
        partial = mpf(prefactor) * mpmath.exp(mpf(_log_sum(log_factors)))
    tail = _tail_bound(primes, log_factors, prime_limit)
    LOGGER.debug("%s over %d primes: %s (tail %.3e)", name, len(primes),
        mpmath.nstr(partial, 15), tail)
    return EulerProductValue(name, partial, prime_limit, tail)


def c1_single_factor(p):
    """ The factor of p = 1 (mod 4) in the closed form of c1. """
    return float(numpy.exp(c1_log_factors(numpy.array([float(p)]))[0]))


def gamma_quarter():
    """ Gamma(1/4) = 4 * int_0^1 exp(-u^4) du + int_1^oo t^(-3/4) e^(-t) dt. """
    with mp.workdps(settings.MP_DPS):
        head = 4 * mpmath.quad(lambda u: mpmath.exp(-u ** 4), [0, 1])
        tail = mpmath.quad(lambda t: t ** mpf(-0.75) * mpmath.exp(-t),
            [1, 10, mpmath.inf])
        return head + tail


def l_one_chi4(terms = 1000, accelerate = True):
    """ L(1, chi4) = 1 - 1/3 + 1/5 - ... .

        With `accelerate` the alternating series goes through the
        Cohen-Villegas-Zagier transform using `terms` terms (at least 1000);
        otherwise the plain partial sum of `terms` terms is returned.
    """
    with mp.workdps(settings.MP_DPS):
        if not accelerate:
            return mpmath.fsum(mpf((-1) ** k) / (2 * k + 1)
                for k in range(terms))
        if terms < 1000:
            raise PreconditionViolated('accelerated sum needs >= 1000 terms')
        n = terms
        d = (3 + mpmath.sqrt(8)) ** n
        d = (d + 1 / d) / 2
        b, c, total = mpf(-1), -d, mpf(0)
        for k in range(n):
            c = b - c
            total += c / (2 * k + 1)
            b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
        return total / d


def p1_inner_series(p):
    """ Term-by-term 1/(2p) + 1/(3p^2) + ... to convergence, with the closed
        form p ln(p/(p-1)) - 1 for comparison.
    """
    terms = []
    k = 1
    while True:
        term = 1.0 / ((k + 1) * float(p) ** k)
        terms.append(term)
        if term < 1e-18 * terms[0]:
            break
        k += 1
    return math.fsum(terms), float(-p * math.log1p(-1.0 / p) - 1)


def c1_closed_form(prime_limit = None):
    """ pi^(3/4) / (2 Gamma(1/4)) times the product over p = 1 (mod 4),
        p <= limit, of ((p-1)/(p+1))^(1/4) (1/(p-1) + (p-1) ln(p/(p-1))).
    """
    prime_limit = prime_limit or settings.CONSTANTS_PRIME_LIMIT
    _check_limit(prime_limit)
    _, ones, _ = _primes(prime_limit)
    with mp.workdps(settings.MP_DPS):
        prefactor = mp.pi ** mpf(0.75) / (2 * gamma_quarter())
        return _product('c1', ones, c1_log_factors(ones), prime_limit,
            prefactor)


def korolev_K(prime_limit = None):
    """ (1/sqrt(pi)) * prod over p <= limit of
        1/sqrt(p(p-1)) + sqrt(1-1/p) (p-1) ln(p/(p-1)).
    """
    prime_limit = prime_limit or settings.CONSTANTS_PRIME_LIMIT
    _check_limit(prime_limit)
    primes, _, _ = _primes(prime_limit)
    with mp.workdps(settings.MP_DPS):
        return _product('K', primes, k_log_factors(primes), prime_limit,
            1 / mpmath.sqrt(mp.pi))


def c_constant(prime_limit = None):
    """ c = prod over p of (1 + chi4(p)/(p(p-1))). """
    prime_limit = prime_limit or settings.CONSTANTS_PRIME_LIMIT
    _check_limit(prime_limit)
    primes, _, _ = _primes(prime_limit)
    return _product('c', primes, c_log_factors(primes), prime_limit)


def p1_product(prime_limit = None):
    prime_limit = prime_limit or settings.CONSTANTS_PRIME_LIMIT
    _check_limit(prime_limit)
    _, ones, _ = _primes(prime_limit)
    return _product('P1', ones, p1_log_factors(ones), prime_limit)


def p3_product(prime_limit = None):
    prime_limit = prime_limit or settings.CONSTANTS_PRIME_LIMIT
    _check_limit(prime_limit)
    _, _, threes = _primes(prime_limit)
    return _product('P3', threes, p3_log_factors(threes), prime_limit)


def g_one(prime_limit = None):
    """ G(1) = (1/2)^(-3/4) L(1, chi4)^(1/4) P1 P3. """
    p1, p3 = p1_product(prime_limit), p3_product(prime_limit)
    with mp.workdps(settings.MP_DPS):
        partial = mpf(2) ** mpf(0.75) * l_one_chi4() ** mpf(0.25) * \
            p1.partial * p3.partial
    return EulerProductValue('G1', partial, p1.prime_limit,
        p1.tail_bound + p3.tail_bound)


def c1_via_identity(prime_limit = None):
    """ c1 = c pi G(1) / (4 Gamma(1/4)). """
    c, g = c_constant(prime_limit), g_one(prime_limit)
    with mp.workdps(settings.MP_DPS):
        partial = c.partial * mp.pi * g.partial / (4 * gamma_quarter())
    return EulerProductValue('c1_identity', partial, c.prime_limit,
        c.tail_bound + g.tail_bound)


def pi_c_over_four(prime_limit = None):
    """ pi c / 4, the constant in front of the main term. """
    c = c_constant(prime_limit)
    with mp.workdps(settings.MP_DPS):
        return EulerProductValue('pi_c_over_4', mp.pi * c.partial / 4,
            c.prime_limit, c.tail_bound)


def constants_report(prime_limit = None):
    """ Every constant as a JSON-ready record, in a fixed order. """
    prime_limit = prime_limit or settings.CONSTANTS_PRIME_LIMIT
    records = [product(prime_limit).as_record() for product in (
        c1_closed_form, c1_via_identity, korolev_K, c_constant, p1_product,
        p3_product, g_one)]
    for name, value in (('gamma_quarter', gamma_quarter()),
            ('L1_chi4', l_one_chi4())):
        records.append({'name': name, 'value': float(value),
            'interval_lo': float(value), 'interval_hi': float(value),
            'prime_limit': None})
    return records
