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

""" Desk-scale evaluation of the dispersion sums: the twisted congruence sum
    U~, its Cauchy-Schwarz majorant W - 2 Re V + U, the regrouped main terms
    U^MT and W^MT, and the prime-factor structure of the weights.

    Dyadic ranges are half-open on the left: d ~ D means D < d <= 2D.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import logging
import math
from dataclasses import dataclass
from typing import Optional

# Numerical
import numpy

# Two Squares Ratio Lab
from .conf import settings
from .arith import chi4, factorize, h_of, phi
from .exceptions import PreconditionViolated, SizeTooLarge
from .sieve import map_segments, primes_upto, sieve_h
from .smooth import psi, psi_hat, psi_window


LOGGER = logging.getLogger(__name__)

MAX_D = 10 ** 3
MAX_N = 10 ** 3
MAX_M = 10 ** 5
INEQUALITY_SLACK = 1e-9


def dyadic(X):
    """ The integers d with X < d <= 2X. """
    return range(int(math.floor(X)) + 1, int(math.floor(2 * X)) + 1)


@dataclass(frozen = True)
class DispersionParams(object):
    """ Range bases D, N, M, the frequency t, the prime-divisor count k, the
        prime interval (j1, j2] and the cap on the support of alpha (defaults
        to 2M).
    """
    D: float
    N: float
    M: float
    t: float = 0.0
    k: int = 1
    j1: float = 2
    j2: float = 16
    x_cap: Optional[int] = None


    def __post_init__(self):
        if min(self.D, self.N, self.M) <= 0:
            raise PreconditionViolated('D, N, M must be positive')
        if self.N > self.M:
            raise PreconditionViolated('need N <= M, got N=%r M=%r' % (
                self.N, self.M))
        if self.k < 1:
            raise PreconditionViolated('k must be a positive integer')
        if self.j1 > self.j2:
            raise PreconditionViolated('need j1 <= j2')
        if self.D > MAX_D or self.N > MAX_N or self.M > MAX_M:
            raise SizeTooLarge('direct loops need D, N <= %d and M <= %d' % (
                MAX_D, MAX_M))


    @property
    def x_limit(self):
        return int(math.floor(2 * self.M)) if self.x_cap is None \
            else self.x_cap


    def interval_primes(self):
        """ The primes p with j1 < p <= j2. """
        primes = primes_upto(int(math.floor(self.j2))).astype(numpy.int64)
        return primes[primes > self.j1]


@dataclass(frozen = True)
class WeightPair(object):
    """ a(m) = alpha(m) m^(-it) and b(n) = beta(n) n^(-it), stored densely
        from index 0.
    """
    a: numpy.ndarray
    b: numpy.ndarray


    def a_at(self, m):
        return complex(self.a[m]) if 0 <= m < len(self.a) else 0j


    def b_at(self, n):
        return complex(self.b[n]) if 0 <= n < len(self.b) else 0j


    def b_support(self, N):
        """ (n, b(n)) over n ~ N with b(n) != 0. """
        n = numpy.array([n for n in dyadic(N) if n < len(self.b) and
            self.b[n] != 0], dtype = numpy.int64)
        return n, self.b[n] if len(n) else numpy.zeros(0, numpy.complex128)


def _twist(values, t):
    index = numpy.arange(len(values), dtype = numpy.float64)
    index[0] = 1.0
    return values * numpy.exp(-1j * t * numpy.log(index))


def build_weights(params):
    """ alpha(m) = 1/h(m) when h(m) != 0, m <= x_cap and m has exactly k - 1
        prime factors in (j1, j2], none of them repeated; beta(n) = 1 on the
        primes n = 1 (mod 4) of (j1, j2].
    """
    top_m = int(math.floor(2 * params.M))
    top_n = int(math.floor(2 * params.N))
    h_values = numpy.zeros(top_m + 1, dtype = numpy.float64)
    h_values[1:] = sieve_h(1, top_m + 1).h_values
    primes = params.interval_primes()
    count = numpy.zeros(top_m + 1, dtype = numpy.int64)
    repeated = numpy.zeros(top_m + 1, dtype = bool)
    for p in primes:
        p = int(p)
        count[p::p] += 1
        repeated[p * p::p * p] = True
    m = numpy.arange(top_m + 1)
    keep = (h_values != 0) & (m <= params.x_limit) & \
        (count == params.k - 1) & ~repeated
    alpha = numpy.zeros(top_m + 1, dtype = numpy.float64)
    alpha[keep] = 1.0 / h_values[keep]
    beta = numpy.zeros(top_n + 1, dtype = numpy.float64)
    chosen = primes[(primes % 4 == 1) & (primes <= top_n)]
    beta[chosen] = 1.0
    return WeightPair(_twist(alpha.astype(numpy.complex128), params.t),
        _twist(beta.astype(numpy.complex128), params.t))


def _complex_fsum(values):
    values = numpy.asarray(values, dtype = numpy.complex128)
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _odd_moduli(D):
    return [d for d in dyadic(D) if d % 2]


def _inverse_residue_sums(n, b, d):
    # Sum of b(n) over (n, d) = 1, bucketed by n* mod d.
    buckets = numpy.zeros(d, dtype = numpy.complex128)
    coprime = numpy.gcd(n, d) == 1
    if coprime.any():
        inverses = [pow(int(v), -1, d) if d > 1 else 0 for v in n[coprime]]
        numpy.add.at(buckets, inverses, b[coprime])
    return buckets


def _coprime_sum(n, b, q):
    return _complex_fsum(b[numpy.gcd(n, q) == 1])


def _u_tilde_worker(task):
    d, m, a, n, b = task
    residues = numpy.bincount(m % d, weights = a.real, minlength = d) + \
        1j * numpy.bincount(m % d, weights = a.imag, minlength = d)
    buckets = _inverse_residue_sums(n, b, d)
    congruent = _complex_fsum(buckets * residues)
    units = numpy.gcd(numpy.arange(d), d) == 1
    expected = _complex_fsum(residues[units]) * _coprime_sum(n, b, d) / phi(d)
    return chi4(d) * (congruent - expected)


def u_tilde(params, weights = None, threads = None):
    """ Sum over d ~ D of chi4(d) times the sum of a(m) b(n) over n ~ N,
        m ~ M with nm = 1 (mod d), minus 1/phi(d) times the same sum over
        (nm, d) = 1. Moduli are shared out over `threads` processes.
    """
    weights = build_weights(params) if weights is None else weights
    m = numpy.array(list(dyadic(params.M)), dtype = numpy.int64)
    a = weights.a[m]
    n, b = weights.b_support(params.N)
    if not len(n):
        return 0j
    tasks = [(d, m, a, n, b) for d in _odd_moduli(params.D)]
    return _complex_fsum(map_segments(_u_tilde_worker, tasks, threads))


def u_tilde_naive(params, weights = None):
    """ :func:`u_tilde` by a plain triple loop. """
    weights = build_weights(params) if weights is None else weights
    total = []
    for d in dyadic(params.D):
        congruent, coprime = [], []
        for n in dyadic(params.N):
            bn = weights.b_at(n)
            if bn == 0:
                continue
            for m in dyadic(params.M):
                term = weights.a_at(m) * bn
                if (n * m) % d == 1 % d:
                    congruent.append(term)
                if math.gcd(n * m, d) == 1:
                    coprime.append(term)
        total.append(chi4(d) * (_complex_fsum(congruent) -
            _complex_fsum(coprime) / phi(d)))
    return _complex_fsum(total)


def norm_a(params, weights = None):
    """ The squared l2-norm of a over m ~ M. """
    weights = build_weights(params) if weights is None else weights
    m = numpy.array(list(dyadic(params.M)), dtype = numpy.int64)
    return math.fsum(numpy.abs(weights.a[m]) ** 2)


def _psi_grid(M):
    first, last = psi_window(M)
    m = numpy.arange(first, last + 1, dtype = numpy.int64)
    return m, numpy.array([psi(v / M) for v in m], dtype = numpy.float64)


def _inner_sums(params, weights):
    # For every m of the psi window: the congruence sum S1(m) and the
    # coprimality sum S2(m), each already summed over d ~ D.
    m, weight = _psi_grid(params.M)
    n, b = weights.b_support(params.N)
    first = numpy.zeros(len(m), dtype = numpy.complex128)
    second = numpy.zeros(len(m), dtype = numpy.complex128)
    if len(n):
        for d in _odd_moduli(params.D):
            first += chi4(d) * _inverse_residue_sums(n, b, d)[m % d]
            second += chi4(d) / phi(d) * _coprime_sum(n, b, d) * \
                (numpy.gcd(m, d) == 1)
    return weight, first, second


def w_v_u(params, weights = None):
    """ The three psi-weighted sums over m in (M/2, 5M/2):
        W pairs two congruence sums, V a congruence sum with a coprimality
        sum, U two coprimality sums.

        :returns: (W, V, U) as complex numbers.
    """
    weights = build_weights(params) if weights is None else weights
    weight, first, second = _inner_sums(params, weights)
    W = _complex_fsum(weight * numpy.abs(first) ** 2)
    V = _complex_fsum(weight * first * numpy.conj(second))
    U = _complex_fsum(weight * numpy.abs(second) ** 2)
    return W, V, U


def u_regrouped(params, weights = None):
    """ U summed in the order Delta = (d1, d2), d_j = Delta k_j with coprime
        k1, k2, each term weighted by the psi mass of m coprime to
        Delta k1 k2.
    """
    weights = build_weights(params) if weights is None else weights
    n, b = weights.b_support(params.N)
    if not len(n):
        return 0j
    m, weight = _psi_grid(params.M)
    moduli = dyadic(params.D)
    if not len(moduli):
        return 0j
    lo, hi = moduli[0], moduli[-1]
    terms = []
    for delta in range(1, hi + 1, 2):
        ks = [k for k in range(1, hi // delta + 1, 2) if delta * k >= lo]
        for k1 in ks:
            d1 = delta * k1
            left = _coprime_sum(n, b, d1)
            for k2 in ks:
                if math.gcd(k1, k2) != 1:
                    continue
                d2 = delta * k2
                mass = math.fsum(weight[numpy.gcd(m, d1 * k2) == 1])
                terms.append(chi4(k1) * chi4(k2) / (phi(d1) * phi(d2)) *
                    left * _coprime_sum(n, b, d2).conjugate() * mass)
    return _complex_fsum(terms)


def _regrouped_main_term(params, weights, cutoff, inner):
    n, b = weights.b_support(params.N)
    if not len(n):
        return 0j
    moduli = dyadic(params.D)
    if not len(moduli):
        return 0j
    lo, hi = moduli[0], moduli[-1]
    scale = params.M * psi_hat(0).value.real
    terms = []
    for delta in range(1, int(cutoff) + 1, 2):
        ks = [k for k in range(1, hi // delta + 1, 2) if delta * k >= lo]
        for k1 in ks:
            for k2 in ks:
                if math.gcd(k1, k2) != 1:
                    continue
                terms.append(chi4(k1) * chi4(k2) / (k1 * k2) *
                    inner(n, b, delta, k1, k2))
    return scale * _complex_fsum(terms)


def u_mt(params, weights = None):
    """ M psi_hat(0) times the sum over odd Delta <= 2D of 1/(Delta phi(Delta))
        times the sum over coprime k1, k2 with Delta k_j ~ D of
        chi4(k1) chi4(k2)/(k1 k2) B(Delta k1) conj(B(Delta k2)), where B(q) is
        the sum of b(n) over n ~ N coprime to q. Real up to rounding.
    """
    weights = build_weights(params) if weights is None else weights

    def inner(n, b, delta, k1, k2):
        return _coprime_sum(n, b, delta * k1) * \
            _coprime_sum(n, b, delta * k2).conjugate() / (delta * phi(delta))

    return _regrouped_main_term(params, weights, 2 * params.D, inner)


def w_mt(params, X = None, weights = None):
    """ As :func:`u_mt` with weight 1/Delta and the product B(Delta k1)
        conj(B(Delta k2)) replaced by the sum of b(n1) conj(b(n2)) over
        n1 = n2 (mod Delta); Delta runs up to X (default 2D).
    """
    X = 2 * params.D if X is None else X
    if X > 2 * params.D:
        raise PreconditionViolated('cutoff %r above 2D' % X)
    weights = build_weights(params) if weights is None else weights

    def classes(n, b, delta, q):
        keep = numpy.gcd(n, q) == 1
        residues = n[keep] % delta
        return numpy.bincount(residues, weights = b[keep].real,
            minlength = delta) + 1j * numpy.bincount(residues,
            weights = b[keep].imag, minlength = delta)

    def inner(n, b, delta, k1, k2):
        return _complex_fsum(classes(n, b, delta, delta * k1) *
            numpy.conj(classes(n, b, delta, delta * k2))) / delta

    return _regrouped_main_term(params, weights, X, inner)


@dataclass(frozen = True)
class InequalityCheck(object):
    lhs: float
    rhs: float
    ok: bool


def dispersion_inequality_check(params, weights = None):
    """ |U~|^2 against ||a||^2 Re(W - 2 Re V + U). The variance form must be
        non-negative up to rounding.
    """
    weights = build_weights(params) if weights is None else weights
    lhs = abs(u_tilde(params, weights)) ** 2
    W, V, U = w_v_u(params, weights)
    norm = norm_a(params, weights)
    variance = W.real - 2 * V.real + U.real
    scale = W.real + 2 * abs(V) + U.real
    rhs = norm * variance
    if variance < -INEQUALITY_SLACK * max(scale, 1.0):
        LOGGER.error("negative variance form %r for %r", variance, params)
        return InequalityCheck(lhs, rhs, False)
    return InequalityCheck(lhs, rhs, lhs <= rhs * (1 + INEQUALITY_SLACK) +
        INEQUALITY_SLACK * norm * scale)


def random_params(rng):
    """ A small random parameter set for sweeps. """
    N = int(rng.integers(8, 41))
    return DispersionParams(
        D = int(rng.integers(2, 13)),
        N = N,
        M = int(rng.integers(N, 121)),
        t = float(rng.uniform(-5.0, 5.0)),
        k = int(rng.integers(1, 3)),
        j1 = int(rng.integers(2, 6)),
        j2 = int(rng.integers(20, 61)))


def inequality_sweep(count = 100, seed = None):
    """ :func:`dispersion_inequality_check` over `count` fixed-seed
        parameter sets.
    """
    rng = numpy.random.default_rng(settings.SEED if seed is None else seed)
    results = []
    for _ in range(count):
        params = random_params(rng)
        results.append((params, dispersion_inequality_check(params)))
    failed = sum(1 for _, check in results if not check.ok)
    LOGGER.info("dispersion inequality: %d sets, %d failures", count, failed)
    return results


def in_a_k(n, k, params):
    """ Whether h(n) != 0 and n has exactly k prime factors in (j1, j2], each
        to the first power.
    """
    f = factorize(n)
    if h_of(f) == 0:
        return False
    inside = [(p, e) for p, e in f.factors if params.j1 < p <= params.j2]
    return len(inside) == k and all(e == 1 for _, e in inside)


def a_k_representations(params, n):
    """ The factorizations n = p m with p a prime of (j1, j2] and m in
        A_(k-1), for n in A_k (k taken from `params`).

        :raises PreconditionViolated: when n is not in A_k.
    """
    if not in_a_k(n, params.k, params):
        raise PreconditionViolated('%d is not in A_%d' % (n, params.k))
    return [(p, n // p) for p in factorize(n).primes
        if params.j1 < p <= params.j2 and in_a_k(n // p, params.k - 1, params)]


def dispersion_report(params, X = None):
    """ Every dispersion quantity for one parameter set, as a flat record. """
    weights = build_weights(params)
    tilde = u_tilde(params, weights)
    W, V, U = w_v_u(params, weights)
    main_u = u_mt(params, weights)
    main_w = w_mt(params, weights = weights)
    check = dispersion_inequality_check(params, weights)
    log_cap = math.log(max(params.x_limit, 3))
    record = {
        'D': params.D, 'N': params.N, 'M': params.M, 't': params.t,
        'k': params.k, 'j1': params.j1, 'j2': params.j2,
        'u_tilde_re': tilde.real, 'u_tilde_im': tilde.imag,
        'W': W.real, 'V_re': V.real, 'V_im': V.imag, 'U': U.real,
        'U_MT': main_u.real, 'U_MT_im': main_u.imag,
        'W_MT': main_w.real, 'W_minus_W_MT': W.real - main_w.real,
        'norm_a_sq': norm_a(params, weights),
        'lhs': check.lhs, 'rhs': check.rhs, 'ok': check.ok,
        'V_minus_U_MT_ratio': abs(V - main_u) /
            (params.N ** 2 * log_cap ** 6 * params.D),
    }
    if not X is None:
        truncated = w_mt(params, X, weights)
        record['W_MT_truncated'] = truncated.real
        record['W_MT_truncation_ratio'] = abs(truncated - main_w) / (
            params.M * params.N ** 2 / math.sqrt(X))
    return record
