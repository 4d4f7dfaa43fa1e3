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

""" Partial sums of h(n)/h(n+1) and tau(n)/tau(n+1), the divisor-range split
    of the h-ratio sum, and the progression-versus-coprime error term.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

# Numerical
import numpy

# Two Squares Ratio Lab
from .conf import settings
from .arith import chi4, factorize, h_of, phi_of
from .exceptions import RangeTooLarge
from .sieve import (
    iter_segments, map_segments, sieve, sieve_segment, smallest_prime_factors)


LOGGER = logging.getLogger(__name__)

CHANNEL_Q = 'q'
CHANNEL_S = 's'
CHANNEL_H = 'h'
CHANNEL_H_ODD = 'h_odd'
CHANNELS = (CHANNEL_Q, CHANNEL_S, CHANNEL_H, CHANNEL_H_ODD)


@dataclass(frozen = True)
class PartialSum(object):
    """ A partial sum at `x`; `exact` is set when computed in rational mode
        and `value` is then its nearest double.
    """
    x: int
    value: float
    exact: Optional[Fraction] = None
    terms_used: int = 0


    @property
    def normalized(self):
        """ value * (ln x)^(3/4) / x. """
        if self.x < 2:
            return float('nan')
        return self.value * math.log(self.x) ** 0.75 / self.x


def _channel_terms(table, lo, hi, channel):
    # Terms for n in [lo, hi); `table` covers [lo, hi + 1).
    size = hi - lo
    n = numpy.arange(lo, hi, dtype = numpy.int64)
    if channel == CHANNEL_Q:
        here = table.h_values[:size].astype(numpy.float64)
        after = table.h_values[1:size + 1].astype(numpy.float64)
        keep = after != 0
        return n[keep], here[keep] / after[keep]
    if channel == CHANNEL_S:
        here = table.tau_values[:size].astype(numpy.float64)
        after = table.tau_values[1:size + 1].astype(numpy.float64)
        return n, here / after
    h = table.h_values[:size].astype(numpy.float64)
    keep = h != 0
    if channel == CHANNEL_H_ODD:
        keep &= n % 2 == 1
    return n[keep], table.density_values[:size][keep] / h[keep]


def _checkpoint_worker(task):
    lo, hi, cuts, channels = task
    table = sieve_segment(lo, hi + 1, tau = CHANNEL_S in channels,
        density = CHANNEL_H in channels or CHANNEL_H_ODD in channels)
    result = {}
    for channel in channels:
        n, terms = _channel_terms(table, lo, hi, channel)
        slots = numpy.searchsorted(cuts, n, side = 'left')
        pieces = []
        for slot in range(len(cuts)):
            chosen = terms[slots == slot]
            pieces.append((math.fsum(chosen), len(chosen)))
        result[channel] = pieces
    return result


def checkpoint_sums(cuts, channels, threads = None, segment_size = None):
    """ Cumulative sums over n <= cut for every cut and channel, from one
        segmented pass.

        Channels: ``q`` sums h(n)/h(n+1) over h(n+1) != 0, ``s`` sums
        tau(n)/tau(n+1), ``h`` sums E(n)/h(n) over h(n) != 0 and ``h_odd``
        does the same over odd n. Cuts below 1 give empty sums.

        :returns: mapping channel -> list of (value, terms) aligned with
            `cuts`.
    """
    cuts = [int(math.floor(cut)) for cut in cuts]
    ordered = sorted(set(cut for cut in cuts if cut >= 1))
    top = ordered[-1] if ordered else 0
    if top > settings.SIEVE_LIMIT:
        raise RangeTooLarge('sums limited to x <= %d' % settings.SIEVE_LIMIT)
    per_segment = []
    if top:
        cut_array = numpy.array(ordered, dtype = numpy.int64)
        tasks = [(lo, hi, cut_array, tuple(channels))
            for lo, hi in iter_segments(1, top + 1, segment_size)]
        per_segment = map_segments(_checkpoint_worker, tasks, threads)
    totals = {}
    for channel in channels:
        cumulative = {}
        for index, cut in enumerate(ordered):
            pieces = [piece[channel][slot] for piece in per_segment
                for slot in range(index + 1)]
            cumulative[cut] = (math.fsum(value for value, _ in pieces),
                sum(count for _, count in pieces))
        totals[channel] = [cumulative.get(cut, (0.0, 0)) for cut in cuts]
    return totals


def _check_float_range(x):
    if x > settings.SIEVE_LIMIT:
        raise RangeTooLarge('float mode limited to x <= %d' %
            settings.SIEVE_LIMIT)


def _exact_ratio_sum(numerators, denominators):
    # Groups equal (numerator, denominator) pairs before touching Fractions.
    pairs, counts = numpy.unique(numpy.stack([numerators, denominators]),
        axis = 1, return_counts = True)
    total = Fraction(0)
    for (a, b), count in zip(pairs.T, counts):
        total += Fraction(int(a) * int(count), int(b))
    return total


def q_of_x(x, exact = False, threads = None, segment_size = None):
    """ Q(x): the sum of h(n)/h(n+1) over n <= x with h(n+1) != 0.

        :param exact: accumulate rationals (x <= ``settings.EXACT_LIMIT``).
        :raises RangeTooLarge: past the limit of the chosen mode.
    """
    if exact:
        if x > settings.EXACT_LIMIT:
            raise RangeTooLarge('exact mode limited to x <= %d' %
                settings.EXACT_LIMIT)
        if x < 1:
            return PartialSum(x, 0.0, Fraction(0), 0)
        table = sieve(1, x + 2, segment_size = segment_size, threads = threads)
        here = table.h_values[:-1].astype(numpy.int64)
        after = table.h_values[1:].astype(numpy.int64)
        keep = after != 0
        value = _exact_ratio_sum(here[keep], after[keep])
        return PartialSum(x, float(value), value, int(keep.sum()))
    _check_float_range(x)
    value, terms = checkpoint_sums([x], (CHANNEL_Q, ), threads,
        segment_size)[CHANNEL_Q][0]
    return PartialSum(x, value, None, terms)


def q_of_x_by_factorization(x):
    """ Q(x) as an exact rational from per-n factorizations. """
    total = Fraction(0)
    terms = 0
    current = h_of(factorize(1))
    for n in range(1, x + 1):
        following = h_of(factorize(n + 1))
        if following:
            total += Fraction(current, following)
            terms += 1
        current = following
    return PartialSum(x, float(total), total, terms)


def s_of_x(x, exact = False, threads = None, segment_size = None):
    """ S(x): the sum of tau(n)/tau(n+1) over n <= x. """
    if exact:
        if x > settings.EXACT_LIMIT:
            raise RangeTooLarge('exact mode limited to x <= %d' %
                settings.EXACT_LIMIT)
        if x < 1:
            return PartialSum(x, 0.0, Fraction(0), 0)
        table = sieve(1, x + 2, tau = True, segment_size = segment_size,
            threads = threads)
        value = _exact_ratio_sum(table.tau_values[:-1].astype(numpy.int64),
            table.tau_values[1:].astype(numpy.int64))
        return PartialSum(x, float(value), value, x)
    _check_float_range(x)
    value, terms = checkpoint_sums([x], (CHANNEL_S, ), threads,
        segment_size)[CHANNEL_S][0]
    return PartialSum(x, value, None, terms)


def split_points(x, A):
    """ The divisor cut points sqrt(x) * L^-A and sqrt(x) * L^A, L = ln x,
        returned as (lower, upper). Every divisor is below both when L = 0.
    """
    L = math.log(x) if x > 1 else 0.0
    if L == 0.0:
        return math.inf, math.inf
    root = math.sqrt(x)
    first, second = root * L ** (-A), root * L ** A
    return min(first, second), max(first, second)


@dataclass(frozen = True)
class Decomposition(object):
    """ Q(x) = q1 + q2 + q3 by divisor range, as exact rationals. """
    x: int
    A: float
    q1: Fraction
    q2: Fraction
    q3: Fraction


    @property
    def total(self):
        return self.q1 + self.q2 + self.q3


    def as_tuple(self):
        return self.q1, self.q2, self.q3


def _odd_divisors(n, spf):
    while n % 2 == 0:
        n //= 2
    divisors = [1]
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        divisors = [d * p ** k for d in divisors for k in range(e + 1)]
    return divisors


def q_decomposition(x, A):
    """ Splits each h(n) = sum of chi4(d) over d | n by d <= lower,
        lower < d <= upper and d > upper (see :func:`split_points`), and sums
        the three parts against 1/h(n+1) exactly.

        :raises RangeTooLarge: above ``settings.DECOMPOSITION_LIMIT``.
    """
    if x > settings.DECOMPOSITION_LIMIT:
        raise RangeTooLarge('decomposition limited to x <= %d' %
            settings.DECOMPOSITION_LIMIT)
    if x < 1:
        return Decomposition(x, A, Fraction(0), Fraction(0), Fraction(0))
    lower, upper = split_points(x, A)
    spf = smallest_prime_factors(x + 1)
    table = sieve(1, x + 2)
    numerators = defaultdict(lambda: [0, 0, 0])
    for n in range(1, x + 1):
        following = int(table.h_values[n])
        if not following:
            continue
        parts = numerators[following]
        for d in _odd_divisors(n, spf):
            if d <= lower:
                parts[0] += chi4(d)
            elif d <= upper:
                parts[1] += chi4(d)
            else:
                parts[2] += chi4(d)
    sums = [Fraction(0)] * 3
    for denominator, parts in sorted(numerators.items()):
        for i in range(3):
            sums[i] += Fraction(parts[i], denominator)
    return Decomposition(x, A, *sums)


def qerr2_direct(x, A):
    """ Sum over lower < d <= upper of chi4(d) times the difference between
        the sum of 1/h(n) over n <= x, n = 1 (mod d) and 1/phi(d) times the
        same sum over n coprime to d (primed sums skip h(n) = 0).
    """
    if x > settings.DECOMPOSITION_LIMIT:
        raise RangeTooLarge('direct error sum limited to x <= %d' %
            settings.DECOMPOSITION_LIMIT)
    lower, upper = split_points(x, A)
    if x < 1 or math.isinf(lower):
        return 0.0
    first = int(math.floor(lower)) + 1
    last = min(int(math.floor(upper)), x)
    if last < first:
        return 0.0
    h_values = sieve(1, x + 1).h_values.astype(numpy.float64)
    inverse = numpy.zeros(x + 1, dtype = numpy.float64)
    nonzero = h_values != 0
    inverse[1:][nonzero] = 1.0 / h_values[nonzero]
    multiples = {}

    def multiple_sum(e):
        if not e in multiples:
            multiples[e] = math.fsum(inverse[e::e])
        return multiples[e]

    terms = []
    for d in range(first | 1, last + 1, 2):
        f = factorize(d)
        progression = math.fsum(inverse[1::d])
        coprime = 0.0
        primes = f.primes
        for mask in range(1 << len(primes)):
            e, sign = 1, 1
            for bit, p in enumerate(primes):
                if mask >> bit & 1:
                    e *= p
                    sign = -sign
            coprime += sign * multiple_sum(e)
        terms.append(chi4(d) * (progression - coprime / phi_of(f)))
    LOGGER.debug("error sum at x=%d used %d moduli", x, len(terms))
    return math.fsum(terms)


def qerr2_normalized(x, A):
    """ |qerr2_direct(x, A)| * (ln x)^(3/4) / x. """
    return abs(qerr2_direct(x, A)) * math.log(x) ** 0.75 / x
