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

""" Exact modular and multiplicative arithmetic.

    Everything here works on Python integers and is pure: factorization of
    64-bit integers, the non-principal character modulo 4, the normalized
    representation count h(n) = r(n)/4 and the classical multiplicative
    functions, plus the residue bookkeeping for simultaneous congruences to
    non-coprime moduli.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

# Numerical
import numpy

# Two Squares Ratio Lab
from .conf import settings
from .exceptions import NotCoprime, BadShape, NoSolution


LOGGER = logging.getLogger(__name__)

TRIAL_DIVISION_BOUND = 10 ** 6
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MAX_INPUT = 2 ** 63


@lru_cache(maxsize = None)
def _small_primes():
    mask = numpy.ones(TRIAL_DIVISION_BOUND + 1, dtype = bool)
    mask[:2] = False
    for p in range(2, isqrt(TRIAL_DIVISION_BOUND) + 1):
        if mask[p]:
            mask[p * p::p] = False
    return tuple(int(p) for p in numpy.flatnonzero(mask))


def mod_inv(a, q):
    """ Multiplicative inverse of `a` modulo `q`, as a residue in [0, q).

        :param a: any integer.
        :param q: modulus, at least 1.
        :returns: v with a * v = 1 (mod q); 0 when q is 1.
        :raises NotCoprime: when gcd(a, q) > 1.
    """
    if q < 1:
        raise ValueError('modulus must be positive, got %r' % q)
    if q == 1:
        return 0
    if gcd(a, q) != 1:
        raise NotCoprime('%d is not invertible modulo %d' % (a, q))
    return pow(a % q, -1, q)


def is_prime(n):
    """ Deterministic Miller-Rabin, exact for every n below 3.3 * 10^24. """
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for base in MILLER_RABIN_BASES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n, rng):
    # Brent's cycle detection with batched gcds; n is odd and composite.
    g = n
    while g == n:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), rng.randrange(1, n)
        g, r, q = 1, 1, 1
        while g == 1:
            x, k = y, 0
            for _ in range(r):
                y = (y * y + c) % n
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g, k = gcd(q, n), k + m
            r *= 2
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = gcd(x - ys, n)
                if g > 1:
                    break
    return g


def _split_large(n, rng, found):
    if n == 1:
        return
    if is_prime(n):
        found[n] = found.get(n, 0) + 1
        return
    root = isqrt(n)
    if root * root == n:
        _split_large(root, rng, found)
        _split_large(root, rng, found)
        return
    d = _pollard_brent(n, rng)
    _split_large(d, rng, found)
    _split_large(n // d, rng, found)


@dataclass(frozen = True)
class Factorization(object):
    """ Prime-power decomposition of a positive integer.

        ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
        increasing primes whose product of powers is ``n``.
    """
    n: int
    factors: tuple


    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)


    def divisors(self):
        """ All positive divisors, in increasing order. """
        divisors = [1]
        for p, e in self.factors:
            divisors = [d * p ** k for d in divisors for k in range(e + 1)]
        return sorted(divisors)


    def radical(self):
        result = 1
        for p in self.primes:
            result *= p
        return result


def factorize(n):
    """ Factorizes 1 <= n < 2^63 by trial division below 10^6, finishing any
        larger cofactor with Miller-Rabin and Brent's rho method. The rho
        method draws from a generator seeded with ``settings.SEED`` so repeated
        calls are reproducible.
    """
    if n < 1 or n >= MAX_INPUT:
        raise ValueError('cannot factorize %r' % n)
    found = {}
    remaining = n
    for p in _small_primes():
        if p * p > remaining:
            break
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            found[p] = e
    if remaining > 1:
        if remaining < TRIAL_DIVISION_BOUND ** 2:
            found[remaining] = found.get(remaining, 0) + 1
        else:
            LOGGER.debug("rho splitting cofactor %d of %d", remaining, n)
            _split_large(remaining, random.Random(settings.SEED), found)
    return Factorization(n, tuple(sorted(found.items())))


def chi4(n):
    """ The non-principal character modulo 4. """
    if n % 2 == 0:
        return 0
    return 1 if n % 4 == 1 else -1


def h_of(f):
    """ h(n) = r(n)/4 from a factorization; multiplicative with h(2^v) = 1,
        h(p^v) = v + 1 for p = 1 (mod 4), and for p = 3 (mod 4) 1 when v is
        even and 0 otherwise.
    """
    result = 1
    for p, e in f.factors:
        if p % 4 == 1:
            result *= e + 1
        elif p % 4 == 3 and e % 2 == 1:
            return 0
    return result


def phi_of(f):
    result = 1
    for p, e in f.factors:
        result *= (p - 1) * p ** (e - 1)
    return result


def tau_of(f):
    result = 1
    for _, e in f.factors:
        result *= e + 1
    return result


def omega_of(f):
    return len(f.factors)


def mu_of(f):
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def h(n):
    return h_of(factorize(n))


def phi(n):
    return phi_of(factorize(n))


def tau(n):
    return tau_of(factorize(n))


def mu(n):
    return mu_of(factorize(n))


def divisor_sum_h(n):
    """ Oracle for h(n) as the divisor sum of chi4. """
    return sum(chi4(d) for d in factorize(n).divisors())


def lattice_count(n):
    """ Number of (a, b) in Z^2 with a^2 + b^2 = n, by enumeration. """
    count = 0
    root = isqrt(n)
    for a in range(-root, root + 1):
        rest = n - a * a
        b = isqrt(rest)
        if b * b == rest:
            count += 1 if b == 0 else 2
    return count


def _valuation(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def decompose_delta(delta, delta1, delta2):
    """ Splits the lcm of (delta * delta1, delta * delta2) into two coprime
        factors ``(P, Q)`` with delta1 | P | delta * delta1 and
        delta2 | Q | delta * delta2.

        Primes of delta dividing neither delta1 nor delta2 go to P with their
        exponent in delta; primes of delta1 go to P with their exponent in
        delta * delta1; primes of delta2 go to Q with their exponent in
        delta * delta2.

        :raises BadShape: unless delta1, delta2 are coprime and only made of
            primes dividing delta.
    """
    if min(delta, delta1, delta2) < 1:
        raise BadShape('moduli must be positive: %r' % ((delta, delta1, delta2),))
    if gcd(delta1, delta2) != 1:
        raise BadShape('%d and %d are not coprime' % (delta1, delta2))
    for part in (delta1, delta2):
        for p in factorize(part).primes:
            if delta % p:
                raise BadShape('prime %d of %d does not divide %d' % (
                    p, part, delta))
    outer = 1
    for p, e in factorize(delta).factors:
        if delta1 % p and delta2 % p:
            outer *= p ** e
    inner1, inner2 = 1, 1
    for p in factorize(delta1).primes:
        inner1 *= p ** _valuation(delta * delta1, p)
    for p in factorize(delta2).primes:
        inner2 *= p ** _valuation(delta * delta2, p)
    return outer * inner1, inner2


@dataclass(frozen = True)
class CrtSystem(object):
    """ m = a (mod delta * delta1), m = b (mod delta * delta2). """
    delta: int
    delta1: int
    delta2: int
    a: int = 0
    b: int = 0


    def __post_init__(self):
        P, Q = decompose_delta(self.delta, self.delta1, self.delta2)
        object.__setattr__(self, 'P', P)
        object.__setattr__(self, 'Q', Q)


    @property
    def modulus(self):
        return self.delta * self.delta1 * self.delta2


    def with_residues(self, a, b):
        return CrtSystem(self.delta, self.delta1, self.delta2, a, b)


def lemma9_lambda(system):
    """ Collapses a :class:`CrtSystem` into a single residue.

        :returns: lambda modulo delta * delta1 * delta2 such that the solutions
            of the system are exactly m = lambda, or :data:`NoSolution` when
            a and b disagree modulo delta.
    """
    if (system.a - system.b) % system.delta:
        return NoSolution
    P, Q = system.P, system.Q
    value = system.a * Q * mod_inv(Q, P) + system.b * P * mod_inv(P, Q)
    return value % system.modulus
