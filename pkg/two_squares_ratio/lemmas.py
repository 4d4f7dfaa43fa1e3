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

""" Brute-force verification of the algebraic and summation identities, and
    the exponential sums used alongside them.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

# Numerical
import mpmath
import numpy
import sympy
from mpmath import mp, mpf
from scipy import integrate

# Two Squares Ratio Lab
from .conf import settings
from .arith import CrtSystem, factorize, mod_inv, phi_of, tau_of
from .characters import (
    enumerate_characters, expected_conductor_times_chi4, times_chi4)
from .exceptions import BadShape, PreconditionViolated, SizeTooLarge
from .sieve import primes_upto, sieve_h


LOGGER = logging.getLogger(__name__)

TRILINEAR_EPSILON = 0.01
TRILINEAR_MAX_SIZE = 200
KLOOSTERMAN_MAX_MODULUS = 10 ** 6


@dataclass(frozen = True)
class VerificationResult(object):
    """ Outcome of an exhaustive check; `counterexample` holds the first
        failing case.
    """
    passed: bool
    checked: int
    counterexample: Optional[tuple] = None


def lemma9_verify(delta, delta1, delta2):
    """ For every pair (a, b) of residues modulo (delta delta1, delta
        delta2), compares the solutions of m = a (mod delta delta1),
        m = b (mod delta delta2) found by scanning all m modulo
        delta delta1 delta2 with the single residue produced by
        :func:`two_squares_ratio.arith.lemma9_lambda`, or with the empty set
        when a and b disagree modulo delta.
    """
    system = CrtSystem(delta, delta1, delta2)
    first, second = delta * delta1, delta * delta2
    modulus = system.modulus
    P, Q = system.P, system.Q
    m = numpy.arange(modulus, dtype = numpy.int64)
    hits = numpy.zeros((first, second), dtype = numpy.int64)
    found = numpy.full((first, second), -1, dtype = numpy.int64)
    numpy.add.at(hits, (m % first, m % second), 1)
    found[m % first, m % second] = m
    a, b = numpy.meshgrid(numpy.arange(first), numpy.arange(second),
        indexing = 'ij')
    compatible = (a - b) % delta == 0
    weight_a = Q * mod_inv(Q, P) % modulus
    weight_b = P * mod_inv(P, Q) % modulus
    expected = (a * weight_a + b * weight_b) % modulus
    bad = (hits != compatible.astype(numpy.int64)) | \
        (compatible & (found != expected))
    if bad.any():
        i, j = numpy.argwhere(bad)[0]
        return VerificationResult(False, first * second, (int(i), int(j),
            int(found[i, j]), int(expected[i, j])))
    return VerificationResult(True, first * second)


def lemma9_shapes(max_delta = 12, max_part = 16):
    """ Every (delta, delta1, delta2) with coprime delta1, delta2 built from
        primes of delta.
    """
    for delta in range(1, max_delta + 1):
        primes = set(factorize(delta).primes)
        parts = [d for d in range(1, max_part + 1)
            if set(factorize(d).primes) <= primes]
        for delta1, delta2 in itertools.product(parts, parts):
            if math.gcd(delta1, delta2) == 1:
                yield delta, delta1, delta2


def lemma9_exhaustive(max_delta = 12, max_part = 16):
    failures = []
    shapes = 0
    for shape in lemma9_shapes(max_delta, max_part):
        shapes += 1
        result = lemma9_verify(*shape)
        if not result.passed:
            failures.append((shape, result.counterexample))
    LOGGER.info("generalized CRT: %d shapes, %d failures", shapes,
        len(failures))
    return shapes, failures


def _lemma10_valid(a, b, c, d, e):
    cd = c * d
    return min(a, b, c, d, e) >= 1 and math.gcd(a, b) == 1 and \
        math.gcd(a, cd) == 1 and math.gcd(b, cd) == 1 and math.gcd(cd, e) == 1


def lemma10_sides(a, b, c, d, e):
    """ Both sides of the inverse-residue congruence as exact rationals:
        (acd)*_b/b + (abe)*_c/c and
        1/(abcd) - (bcd)*_a/a + (d - e)(abe)*_cd/(cd).
    """
    if not _lemma10_valid(a, b, c, d, e):
        raise PreconditionViolated('need a, b, cd pairwise coprime and '
            '(cd, e) = 1, got %r' % ((a, b, c, d, e), ))
    cd = c * d
    left = Fraction(mod_inv(a * cd, b), b) + Fraction(mod_inv(a * b * e, c), c)
    right = Fraction(1, a * b * cd) - Fraction(mod_inv(b * cd, a), a) + \
        (d - e) * Fraction(mod_inv(a * b * e, cd), cd)
    return left, right


def lemma10_verify(a, b, c, d, e):
    """ True when both sides agree modulo 1. """
    left, right = lemma10_sides(a, b, c, d, e)
    return (left - right).denominator == 1


def lemma10_sweep(count = 10 ** 4, seed = None, max_entry = 1000):
    """ Checks `count` pseudo-random valid tuples with entries up to
        `max_entry`; returns the failing tuples.
    """
    rng = numpy.random.default_rng(settings.SEED if seed is None else seed)
    failures = []
    checked = 0
    while checked < count:
        entries = tuple(int(v) for v in rng.integers(1, max_entry + 1, size = 5))
        if not _lemma10_valid(*entries):
            continue
        checked += 1
        if not lemma10_verify(*entries):
            failures.append(entries)
    return failures


def derivative_kernels(g, z):
    """ F1 = z g', F2 = z g' + z^2 g'', F3 = z g' + 3 z^2 g'' + z^3 g'''. """
    with mp.workdps(40):
        z = mpf(z)
        d1, d2, d3 = (mpmath.diff(g, z, k) for k in (1, 2, 3))
        return (z * d1, z * d1 + z ** 2 * d2,
            z * d1 + 3 * z ** 2 * d2 + z ** 3 * d3)


def _central_difference(function, point, axes, step):
    total = mpf(0)
    for signs in itertools.product((1, -1), repeat = len(axes)):
        shifted = list(point)
        for axis, sign in zip(axes, signs):
            shifted[axis] += sign * step[axis]
        total += math.prod(signs) * function(*shifted)
    for axis in axes:
        total /= 2 * step[axis]
    return total


def lemma10_5_verify(g, a, x1, x2, x3):
    """ Compares every first, mixed second and the mixed third partial of
        F = g(a x1/(x2 x3)) with its closed form in F1, F2, F3, using central
        differences at relative steps 1e-3 and 1e-4 combined by Richardson
        extrapolation.

        :returns: the largest relative error.
    """
    if x2 == 0 or x3 == 0:
        raise PreconditionViolated('x2 and x3 must be non-zero')
    with mp.workdps(40):
        x = [mpf(x1), mpf(x2), mpf(x3)]
        z = a * x[0] / (x[1] * x[2])
        F1, F2, F3 = derivative_kernels(g, z)
        closed = {
            (0, ): F1 / x[0],
            (1, ): -F1 / x[1],
            (2, ): -F1 / x[2],
            (0, 1): -F2 / (x[0] * x[1]),
            (0, 2): -F2 / (x[0] * x[2]),
            (1, 2): F2 / (x[1] * x[2]),
            (0, 1, 2): F3 / (x[0] * x[1] * x[2]),
        }
        F = lambda u, v, w: g(a * u / (v * w))
        worst = 0.0
        for axes, expected in closed.items():
            coarse = _central_difference(F, x, axes,
                [abs(v) * mpf('1e-3') for v in x])
            fine = _central_difference(F, x, axes,
                [abs(v) * mpf('1e-4') for v in x])
            estimate = fine + (fine - coarse) / 99
            scale = max(abs(expected), mpf('1e-30'))
            worst = max(worst, float(abs(estimate - expected) / scale))
        return worst


def lemma11_verify(m, c, f, K, L):
    """ Multidimensional partial summation on the box K < l <= L.

        `c` is an integer array of shape (L_i - K_i) whose entry at
        ``l - K - 1`` is c(l); `f` takes m arguments and must accept sympy
        symbols so its mixed partials can be formed exactly. The left side is
        the direct sum of c(l) f(l); the right side is C(L) f(L) plus, for
        every non-empty set S of axes, (-1)^|S| times the integral over the
        S-box of C(b) times the S-mixed partial of f at b, where b takes x_k
        on S and L_k elsewhere.

        :returns: ``|left - right|``.
    """
    if not m in (1, 2, 3):
        raise PreconditionViolated('dimension must be 1, 2 or 3')
    c = numpy.asarray(c, dtype = numpy.int64).reshape(
        [L[i] - K[i] for i in range(m)])
    if max(c.shape) > 30:
        raise SizeTooLarge('ranges are limited to 30 per axis')
    symbols = sympy.symbols('x0:%d' % m)
    expression = sympy.sympify(f(*symbols))
    value_of = sympy.lambdify(symbols, expression, 'math')

    left = math.fsum(float(c[index]) * value_of(*[K[i] + index[i] + 1
        for i in range(m)]) for index in numpy.ndindex(*c.shape)
        if c[index])

    cumulative = numpy.pad(c, [(1, 0)] * m)
    for axis in range(m):
        cumulative = numpy.cumsum(cumulative, axis = axis)
    full = tuple(L[i] - K[i] for i in range(m))
    pieces = [float(cumulative[full]) * value_of(*L)]
    for size in range(1, m + 1):
        for axes in itertools.combinations(range(m), size):
            derivative = sympy.lambdify(symbols, sympy.diff(expression,
                *[symbols[i] for i in axes]), 'math')
            cells = [range(full[i]) for i in axes]
            for cell in itertools.product(*cells):
                index = list(full)
                for axis, offset in zip(axes, cell):
                    index[axis] = offset
                weight = int(cumulative[tuple(index)])
                if not weight:
                    continue

                def integrand(*free):
                    point = list(L)
                    for axis, value in zip(axes, free):
                        point[axis] = value
                    return derivative(*point)

                bounds = [(K[axis] + offset, K[axis] + offset + 1)
                    for axis, offset in zip(axes, cell)]
                integral = integrate.nquad(integrand, bounds, opts = {
                    'epsabs': 1e-11, 'epsrel': 1e-11})[0]
                pieces.append((-1) ** size * weight * integral)
    return abs(left - math.fsum(pieces))


def kloosterman(a, b, c):
    """ Sum over m mod c coprime to c of e((a m + b m*)/c). """
    if c > KLOOSTERMAN_MAX_MODULUS:
        raise SizeTooLarge('modulus %d above %d' % (c, KLOOSTERMAN_MAX_MODULUS))
    if c == 1:
        return complex(1, 0)
    m = numpy.arange(1, c, dtype = numpy.int64)
    m = m[numpy.gcd(m, c) == 1]
    inverse = numpy.array([pow(int(v), -1, c) for v in m], dtype = numpy.int64)
    turns = ((a % c) * m + (b % c) * inverse) % c / c
    return complex(math.fsum(numpy.cos(2 * math.pi * turns)),
        math.fsum(numpy.sin(2 * math.pi * turns)))


def support(bound):
    """ Integers in [bound/2, bound]. """
    return range(int(math.ceil(bound / 2)), int(math.floor(bound)) + 1)


@dataclass(frozen = True)
class TrilinearSpec(object):
    """ Sequences alpha on [M/2, M], beta on [N/2, N] and nu on [A/2, A],
        listed in increasing order of their index, and a non-zero integer
        theta.
    """
    M: float
    N: float
    A: float
    theta: int
    alpha: tuple
    beta: tuple
    nu: tuple


    def __post_init__(self):
        if max(self.M, self.N, self.A) > TRILINEAR_MAX_SIZE:
            raise SizeTooLarge('M, N, A are limited to %d' %
                TRILINEAR_MAX_SIZE)
        if self.theta == 0:
            raise PreconditionViolated('theta must be non-zero')
        for name, bound in (('alpha', self.M), ('beta', self.N),
                ('nu', self.A)):
            if len(getattr(self, name)) != len(support(bound)):
                raise BadShape('%s must have %d entries' % (name,
                    len(support(bound))))


    @classmethod
    def constant(cls, M, N, A, theta, value = 1.0):
        return cls(M, N, A, theta, (value, ) * len(support(M)),
            (value, ) * len(support(N)), (value, ) * len(support(A)))


def trilinear_B(spec):
    """ The triple sum of alpha_m beta_n nu_a e(theta a m*_n / n) over
        coprime (m, n), and its ratio to the trilinear bound with constant 1
        and epsilon = 0.01.

        :returns: (value, bound_ratio).
    """
    a_values = numpy.array(list(support(spec.A)), dtype = numpy.int64)
    nu = numpy.array(spec.nu, dtype = numpy.complex128)
    real, imag = [], []
    for m, alpha in zip(support(spec.M), spec.alpha):
        if alpha == 0:
            continue
        for n, beta in zip(support(spec.N), spec.beta):
            if beta == 0 or math.gcd(m, n) != 1:
                continue
            residue = mod_inv(m, n)
            turns = (spec.theta * a_values * residue) % n / n
            inner = complex(alpha) * complex(beta) * numpy.sum(
                nu * numpy.exp(2j * math.pi * turns))
            real.append(inner.real)
            imag.append(inner.imag)
    value = complex(math.fsum(real), math.fsum(imag))
    norms = [math.sqrt(math.fsum(abs(complex(v)) ** 2 for v in sequence))
        for sequence in (spec.alpha, spec.beta, spec.nu)]
    M, N, A = spec.M, spec.N, spec.A
    eps = TRILINEAR_EPSILON
    volume = A * M * N
    bound = norms[0] * norms[1] * norms[2] * \
        math.sqrt(1 + abs(spec.theta) * A / (M * N)) * (
        volume ** (7 / 20 + eps) * (M + N) ** 0.25 +
        volume ** (3 / 8 + eps) * (A * M + A * N) ** 0.125)
    return value, abs(value) / bound if bound else 0.0


def trilinear_sweep(points = 50, seed = None):
    """ Bound ratios for `points` fixed-seed parameter sets with random unit
        sequences.
    """
    rng = numpy.random.default_rng(settings.SEED if seed is None else seed)
    ratios = []
    for _ in range(points):
        M, N, A = (int(v) for v in rng.integers(4, 41, size = 3))
        theta = int(rng.choice([-1, 1])) * int(rng.integers(1, 6))
        sequences = [tuple(numpy.exp(2j * math.pi * rng.random(len(support(X)))))
            for X in (M, N, A)]
        ratios.append(trilinear_B(TrilinearSpec(M, N, A, theta,
            *sequences))[1])
    return ratios


def euler_factor_coefficients(order = 5):
    """ Taylor coefficients of (sum of x^k/(k+1)) (1-x)^(1/2) (1-x^2)^(-1/24)
        up to x^(order-1).
    """
    x = sympy.Symbol('x')
    head = sum(x ** k / (k + 1) for k in range(order + 1))
    expression = head * sympy.sqrt(1 - x) * (1 - x ** 2) ** sympy.Rational(-1, 24)
    series = sympy.series(expression, x, 0, order).removeO()
    return [sympy.Rational(series.coeff(x, k)) for k in range(order)]


def _prime_h(primes):
    residues = primes % 4
    return numpy.where(residues == 1, 2.0, numpy.where(residues == 3, 0.0, 1.0))


def shiu_ratio(x, q = 4, a = 1, y = None):
    """ Sum of h(n) over x - y < n <= x, n = a (mod q), against
        (y/phi(q)) (1/ln x) exp(sum over p <= x, p not dividing q, of
        h(p)/p). Report-only.
    """
    y = x // 2 if y is None else y
    table = sieve_h(x - y + 1, x + 1)
    n = numpy.arange(x - y + 1, x + 1, dtype = numpy.int64)
    chosen = n % q == a % q
    total = math.fsum(table.h_values[chosen].astype(numpy.float64))
    primes = primes_upto(x).astype(numpy.int64)
    primes = primes[q % primes != 0]
    mertens = math.fsum((_prime_h(primes) / primes).tolist())
    scale = y / phi_of(factorize(q)) / math.log(x) * math.exp(mertens)
    return total / scale


@dataclass(frozen = True)
class RichertHalberstam(object):
    ratio: float
    A: float
    B: float


def richert_halberstam_ratio(x):
    """ For f = 1/h on its support: the sum of f(n) over n <= x against
        (A + B + 1) (x / ln x) times the sum of f(n)/n, with empirical
        stand-ins A = max over y of sum_{p <= y} f(p) ln p / y and B the sum
        over prime powers p^v <= x, v >= 2, of f(p^v) ln(p^v) / p^v.
    """
    table = sieve_h(1, x + 1)
    h_values = table.h_values.astype(numpy.float64)
    n = numpy.arange(1, x + 1, dtype = numpy.float64)
    f = numpy.zeros(x)
    f[h_values != 0] = 1.0 / h_values[h_values != 0]
    primes = primes_upto(x).astype(numpy.int64)
    prime_f = f[primes - 1]
    running = numpy.cumsum(prime_f * numpy.log(primes))
    A = float(numpy.max(running / primes)) if len(primes) else 0.0
    tail = []
    for p in primes:
        p = int(p)
        if p * p > x:
            break
        power, v = p * p, 2
        while power <= x:
            tail.append(f[power - 1] * v * math.log(p) / power)
            power *= p
            v += 1
    B = math.fsum(tail)
    numerator = math.fsum(f.tolist())
    denominator = (A + B + 1) * x / math.log(x) * math.fsum((f / n).tolist())
    return RichertHalberstam(numerator / denominator, A, B)


def weil_bound_check(max_modulus = 200, seed = None):
    """ |K(a, b; c)| against tau(c) sqrt(gcd(a, b, c) c) for one random pair
        (a, b) per modulus 2 <= c <= `max_modulus`.

        :returns: the largest ratio seen.
    """
    rng = numpy.random.default_rng(settings.SEED if seed is None else seed)
    worst = 0.0
    for c in range(2, max_modulus + 1):
        a, b = (int(v) for v in rng.integers(1, c + 1, size = 2))
        bound = tau_of(factorize(c)) * math.sqrt(math.gcd(a, b, c) * c)
        worst = max(worst, abs(kloosterman(a, b, c)) / bound)
    return worst


def conductor_table(max_modulus = 300, min_modulus = 3):
    """ For every primitive character modulo d in [min_modulus, max_modulus],
        compares the conductor of its product with chi4 against
        :func:`two_squares_ratio.characters.expected_conductor_times_chi4`.

        :returns: (characters checked, failing (d, indices) pairs).
    """
    checked = 0
    failures = []
    for d in range(min_modulus, max_modulus + 1):
        if d % 4 == 2:
            continue
        for character in enumerate_characters(d):
            if not character.is_primitive():
                continue
            checked += 1
            _, conductor = times_chi4(character)
            if conductor != expected_conductor_times_chi4(d):
                failures.append((d, character.indices))
    LOGGER.info("conductor table: %d primitive characters, %d failures",
        checked, len(failures))
    return checked, failures
