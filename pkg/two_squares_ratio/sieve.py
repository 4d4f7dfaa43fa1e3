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

""" Segmented multiplicative sieves.

    A segment [lo, hi) is sieved by walking the base primes p <= sqrt(hi),
    extracting the full power of p from each multiple in one strided pass and
    folding its contribution into every requested channel. Whatever is left
    above 1 is a single prime. Channels:

    * ``h`` - h(n) = r(n)/4, always present, stored as uint32;
    * ``tau`` - the divisor function, uint32;
    * ``density`` - the local density E(n) as float64, multiplied prime by
      prime in ascending order so every segmentation yields identical bits.

    Segments are independent, so they may be farmed out to a process pool;
    :func:`map_segments` always hands results back in ascending order.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import logging
import struct
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from multiprocessing import Pool
from typing import Optional

# Numerical
import numpy

# Two Squares Ratio Lab
from .conf import settings
from .exceptions import RangeTooLarge


LOGGER = logging.getLogger(__name__)

DUMP_HEADER = struct.Struct('<qq')


def _simple_primes(limit):
    if limit < 2:
        return numpy.array([], dtype = numpy.int64)
    mask = numpy.ones(limit + 1, dtype = bool)
    mask[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return numpy.flatnonzero(mask).astype(numpy.int64)


@lru_cache(maxsize = 8)
def _base_primes(limit):
    primes = _simple_primes(limit)
    primes.setflags(write = False)
    return primes


def primes_upto(limit, segment_size = None):
    """ All primes not exceeding `limit`, as a sorted numpy array (uint32 when
        the limit fits, int64 otherwise).

        :param limit: upper bound, at most ``settings.SIEVE_LIMIT``.
        :raises RangeTooLarge: above the configured sieve limit.
    """
    if limit > settings.SIEVE_LIMIT:
        raise RangeTooLarge('primes_upto limited to %d, got %d' % (
            settings.SIEVE_LIMIT, limit))
    dtype = numpy.uint32 if limit < 2 ** 32 else numpy.int64
    if limit < 2:
        return numpy.array([], dtype = dtype)
    if segment_size is None:
        segment_size = settings.SEGMENT_SIZE
    base = _base_primes(isqrt(limit))
    if limit <= segment_size:
        return _simple_primes(limit).astype(dtype)
    chunks = [base.astype(dtype)]
    low = int(base[-1]) + 1 if len(base) else 2
    while low <= limit:
        high = min(low + segment_size, limit + 1)
        mask = numpy.ones(high - low, dtype = bool)
        for p in base:
            p = int(p)
            start = max(p * p, -(-low // p) * p)
            if start >= high:
                continue
            mask[start - low::p] = False
        chunks.append((numpy.flatnonzero(mask) + low).astype(dtype))
        low = high
    return numpy.concatenate(chunks)


def smallest_prime_factors(limit):
    """ Array `spf` of length limit + 1 with spf[n] the least prime factor of
        n for n >= 2 (spf[0] = spf[1] = 0).
    """
    spf = numpy.zeros(limit + 1, dtype = numpy.uint32)
    for p in _base_primes(isqrt(limit)):
        p = int(p)
        block = spf[p * p::p]
        block[block == 0] = p
        spf[p] = p
    rest = numpy.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    return spf


def density_factor(p):
    """ The Euler factor of E(n) at a prime p dividing n. """
    if p % 4 == 1:
        return (p - 1) ** 2 / (p * p - p + 1)
    if p % 4 == 3:
        return (p * p - 1) / (p * p - p - 1)
    return 1.0


def _density_factors(primes):
    primes = primes.astype(numpy.float64)
    ones = numpy.ones_like(primes)
    residue = numpy.mod(primes, 4)
    one_mod_four = (primes - 1) ** 2 / (primes * primes - primes + 1)
    three_mod_four = (primes * primes - 1) / (primes * primes - primes - 1)
    return numpy.where(residue == 1, one_mod_four,
        numpy.where(residue == 3, three_mod_four, ones))


@dataclass(frozen = True)
class SieveTable(object):
    """ Immutable per-n channels over the half-open range [lo, hi). """
    lo: int
    hi: int
    h_values: numpy.ndarray
    tau_values: Optional[numpy.ndarray] = None
    density_values: Optional[numpy.ndarray] = None


    def __post_init__(self):
        for values in (self.h_values, self.tau_values, self.density_values):
            if not values is None:
                values.setflags(write = False)


    def __len__(self):
        return self.hi - self.lo


    def _index(self, n):
        if not self.lo <= n < self.hi:
            raise IndexError('%d outside [%d, %d)' % (n, self.lo, self.hi))
        return n - self.lo


    def h(self, n):
        return int(self.h_values[self._index(n)])


    def tau(self, n):
        return int(self.tau_values[self._index(n)])


    def density(self, n):
        return float(self.density_values[self._index(n)])


def sieve_segment(lo, hi, tau = False, density = False):
    """ Sieves one segment in memory; no range policing, no parallelism. """
    size = hi - lo
    rem = numpy.arange(lo, hi, dtype = numpy.int64)
    h_values = numpy.ones(size, dtype = numpy.uint32)
    tau_values = numpy.ones(size, dtype = numpy.uint32) if tau else None
    density_values = numpy.ones(size, dtype = numpy.float64) if density \
        else None
    top = hi - 1
    for p in _base_primes(isqrt(top)):
        p = int(p)
        start = (-lo) % p
        if start >= size:
            continue
        exponents = numpy.ones(len(range(start, size, p)), dtype = numpy.int64)
        power = p * p
        while power <= top:
            offset = (-lo) % power
            if offset >= size:
                break
            exponents[(offset - start) // p::power // p] += 1
            power *= p
        block = rem[start::p]
        block //= numpy.power(p, exponents)
        if p % 4 == 1:
            h_values[start::p] *= (exponents + 1).astype(numpy.uint32)
        elif p % 4 == 3:
            h_values[start::p] *= ((exponents + 1) % 2).astype(numpy.uint32)
        if tau:
            tau_values[start::p] *= (exponents + 1).astype(numpy.uint32)
        if density and p != 2:
            density_values[start::p] *= density_factor(p)
    large = numpy.flatnonzero(rem > 1)
    if len(large):
        cofactors = rem[large]
        residue = cofactors % 4
        h_values[large[residue == 1]] *= 2
        h_values[large[residue == 3]] = 0
        if tau:
            tau_values[large] *= 2
        if density:
            density_values[large] *= _density_factors(cofactors)
    return SieveTable(lo, hi, h_values, tau_values, density_values)


def iter_segments(lo, hi, segment_size = None):
    """ Consecutive [start, stop) pieces covering [lo, hi). """
    if segment_size is None:
        segment_size = settings.SEGMENT_SIZE
    start = lo
    while start < hi:
        stop = min(start + segment_size, hi)
        yield start, stop
        start = stop


def map_segments(worker, tasks, threads = None):
    """ Applies `worker` to every task and returns the results in task order.
        Uses a process pool when more than one thread is requested.
    """
    tasks = list(tasks)
    if threads is None:
        threads = settings.THREADS
    if threads <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    LOGGER.debug("sieving %d segments on %d processes", len(tasks), threads)
    with Pool(processes = min(threads, len(tasks))) as pool:
        return list(pool.imap(worker, tasks))


def _check_range(lo, hi):
    if lo < 1 or hi <= lo:
        raise RangeTooLarge('invalid sieve range [%d, %d)' % (lo, hi))
    if hi > settings.SIEVE_LIMIT + 2:
        raise RangeTooLarge('sieve range ends above %d' % settings.SIEVE_LIMIT)
    if hi - lo > settings.TABLE_LIMIT:
        raise RangeTooLarge('table of %d entries exceeds %d' % (
            hi - lo, settings.TABLE_LIMIT))


def _table_worker(task):
    lo, hi, tau, density = task
    return sieve_segment(lo, hi, tau, density)


def sieve(lo, hi, tau = False, density = False, segment_size = None,
        threads = None):
    """ Sieves [lo, hi) segment by segment and concatenates the channels.

        :raises RangeTooLarge: when the range is empty, starts below 1, ends
            above the configured limit, or does not fit the table budget.
    """
    _check_range(lo, hi)
    tasks = [(start, stop, tau, density)
        for start, stop in iter_segments(lo, hi, segment_size)]
    pieces = map_segments(_table_worker, tasks, threads)

    def join(name):
        if getattr(pieces[0], name) is None:
            return None
        return numpy.concatenate([getattr(piece, name) for piece in pieces])

    return SieveTable(lo, hi, join('h_values'), join('tau_values'),
        join('density_values'))


def sieve_h(lo, hi, segment_size = None, threads = None):
    return sieve(lo, hi, segment_size = segment_size, threads = threads)


def sieve_tau(lo, hi, segment_size = None, threads = None):
    return sieve(lo, hi, tau = True, segment_size = segment_size,
        threads = threads)


def dump_table(table, stream, channel = 'h_values'):
    """ Writes the little-endian binary form: (lo, hi) as int64 followed by
        the raw uint32 values of one channel.
    """
    stream.write(DUMP_HEADER.pack(table.lo, table.hi))
    stream.write(getattr(table, channel).astype('<u4').tobytes())


def load_table(stream):
    lo, hi = DUMP_HEADER.unpack(stream.read(DUMP_HEADER.size))
    values = numpy.frombuffer(stream.read(4 * (hi - lo)), dtype = '<u4')
    return SieveTable(lo, hi, values.astype(numpy.uint32))


def totients(limit):
    """ Euler's phi over 0 .. limit (phi[0] = 0). """
    phi = numpy.arange(limit + 1, dtype = numpy.int64)
    for p in primes_upto(limit):
        p = int(p)
        phi[p::p] -= phi[p::p] // p
    return phi
