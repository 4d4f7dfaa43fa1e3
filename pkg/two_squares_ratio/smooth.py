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

""" Smooth cutoffs and their transforms.

    rho(x) = exp(1/(x^2 - 1)) on (-1, 1) is the mollifier; sigma(a, b, delta)
    is the indicator of [a, b] convolved with rho(2t/delta) and normalized to
    plateau at 1. psi = sigma(3/4, 9/4, 1/2) lives on (1/2, 5/2) and equals 1
    on [1, 2]; f_delta = sigma(3 delta/2, 1 + delta/2, delta) lives on
    (delta, 1 + delta) and equals 1 on [2 delta, 1].

    Because sigma is a convolution, its Fourier transform factors into the
    transform of the indicator times a cosine moment of rho; that is how
    :func:`psi_hat` evaluates it. :func:`psi_hat_direct` integrates the
    definition instead and is kept as a cross-check.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import cmath
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

# Numerical
import numpy
import sympy
from scipy import integrate, special

# Two Squares Ratio Lab
from .conf import settings
from .arith import factorize, phi_of, tau_of
from .exceptions import DerivOrderTooHigh, PreconditionViolated


LOGGER = logging.getLogger(__name__)

MAX_DERIVATIVE_ORDER = 12
UNDERFLOW_EXPONENT = -700.0
PSI_HAT_LIMIT = 1.0e4


@dataclass(frozen = True)
class QuadratureResult(object):
    value: Union[float, complex]
    abs_error_estimate: float = 0.0


def _quad(function, lo, hi, **options):
    options.setdefault('epsabs', settings.QUAD_EPSABS)
    options.setdefault('epsrel', 1e-12)
    options.setdefault('limit', settings.QUAD_LIMIT)
    value, error = integrate.quad(function, lo, hi, **options)[:2]
    return value, error


@lru_cache(maxsize = None)
def _rho_ratio(j):
    # R_j with rho^(j) = R_j * rho, from R_(j+1) = R_j' + R_j * (-2x/(x^2-1)^2).
    x = sympy.Symbol('x')
    ratio = sympy.Integer(1)
    for _ in range(j):
        ratio = sympy.cancel(sympy.diff(ratio, x) +
            ratio * (-2 * x / (x ** 2 - 1) ** 2))
    return sympy.lambdify(x, ratio, 'math')


def rho(x):
    """ exp(1/(x^2 - 1)) for |x| < 1, else 0. """
    if abs(x) >= 1:
        return 0.0
    exponent = 1.0 / (x * x - 1.0)
    if exponent < UNDERFLOW_EXPONENT:
        return 0.0
    return math.exp(exponent)


def rho_deriv(x, j):
    """ The j-th derivative of rho, j <= 12, through the exact rational
        recurrence rather than differences.
    """
    if j > MAX_DERIVATIVE_ORDER:
        raise DerivOrderTooHigh('derivative order %d above %d' % (j,
            MAX_DERIVATIVE_ORDER))
    if j == 0:
        return rho(x)
    base = rho(x)
    if base == 0.0:
        return 0.0
    return _rho_ratio(j)(x) * base


def rho_deriv_bound(j):
    return float((2 ** j * math.factorial(j)) ** 2)


@lru_cache(maxsize = None)
def rho_integral():
    """ The integral of rho over [-1, 1] (about 0.443994). """
    return _quad(rho, -1.0, 1.0)[0]


@lru_cache(maxsize = 4096)
def _rho_primitive(u):
    if u <= -1.0:
        return 0.0
    if u >= 1.0:
        return rho_integral()
    return _quad(rho, -1.0, u)[0]


@dataclass(frozen = True)
class BumpSpec(object):
    """ Parameters (a, b, delta) of sigma with 0 < delta < b - a; the
        normalization `c`, the integral of rho(2t/delta), is computed by
        quadrature at construction.
    """
    a: float
    b: float
    delta: float
    c: float = field(init = False)


    def __post_init__(self):
        if not 0 < self.delta < self.b - self.a:
            raise PreconditionViolated('need 0 < delta < b - a, got %r' % (
                (self.a, self.b, self.delta), ))
        half = self.delta / 2
        norm = _quad(lambda t: rho(t / half), -half, half)[0]
        object.__setattr__(self, 'c', norm)


    @property
    def support(self):
        return self.a - self.delta / 2, self.b + self.delta / 2


    @property
    def plateau(self):
        return self.a + self.delta / 2, self.b - self.delta / 2


def sigma(spec, x):
    """ (1/c) * integral of rho(2t/delta) over [x - b, x - a]: 1 on the
        plateau, 0 off the support, monotone in between.
    """
    lo, hi = spec.support
    if x <= lo or x >= hi:
        return 0.0
    start, stop = spec.plateau
    if start <= x <= stop:
        return 1.0
    upper = min(1.0, 2 * (x - spec.a) / spec.delta)
    lower = max(-1.0, 2 * (x - spec.b) / spec.delta)
    if upper <= lower:
        return 0.0
    value = (_rho_primitive(upper) - _rho_primitive(lower)) / rho_integral()
    return min(1.0, max(0.0, value))


PSI_SPEC = BumpSpec(0.75, 2.25, 0.5)


def psi(x):
    return sigma(PSI_SPEC, x)


@lru_cache(maxsize = 64)
def f_delta_spec(delta):
    if not 0 < delta < 0.5:
        raise PreconditionViolated('need 0 < delta < 1/2, got %r' % delta)
    return BumpSpec(1.5 * delta, 1 + delta / 2, delta)


def f_delta(delta, u):
    return sigma(f_delta_spec(delta), u)


def _indicator_hat(a, b, frequency):
    if frequency == 0:
        return complex(b - a, 0)
    return (cmath.exp(-2j * math.pi * frequency * a) -
        cmath.exp(-2j * math.pi * frequency * b)) / (2j * math.pi * frequency)


def sigma_hat(spec, frequency):
    """ Fourier transform of sigma: the indicator transform times the cosine
        moment of rho at pi * frequency * delta, over the integral of rho.
    """
    if abs(frequency) > PSI_HAT_LIMIT:
        raise PreconditionViolated('|lambda| <= %g required' % PSI_HAT_LIMIT)
    indicator = _indicator_hat(spec.a, spec.b, frequency)
    omega = math.pi * frequency * spec.delta
    if omega == 0:
        moment, error = rho_integral(), 0.0
    else:
        moment, error = _quad(rho, -1.0, 1.0, weight = 'cos',
            wvar = abs(omega))
    value = indicator * moment / rho_integral()
    if frequency == 0:
        value = complex(value.real, 0.0)
    return QuadratureResult(value, abs(indicator) * error / rho_integral())


def psi_hat(frequency):
    """ The Fourier transform of psi at `frequency` (|frequency| <= 10^4). """
    return sigma_hat(PSI_SPEC, frequency)


def _panels(spec):
    lo, hi = spec.support
    start, stop = spec.plateau
    return ((lo, start), (start, stop), (stop, hi))


def _weighted(function, lo, hi, omega):
    # Integral of function(t) * exp(-i omega t) over [lo, hi].
    if omega == 0:
        real, error = _quad(function, lo, hi)
        return complex(real, 0.0), error
    if omega < 0:
        value, error = _weighted(function, lo, hi, -omega)
        return value.conjugate(), error
    real, e1 = _quad(function, lo, hi, weight = 'cos', wvar = omega)
    imag, e2 = _quad(function, lo, hi, weight = 'sin', wvar = omega)
    return complex(real, -imag), e1 + e2


def psi_hat_direct(frequency):
    """ The transform of psi by quadrature of the definition over its three
        panels.
    """
    value, error = complex(0, 0), 0.0
    for lo, hi in _panels(PSI_SPEC):
        part, part_error = _weighted(psi, lo, hi, 2 * math.pi * frequency)
        value += part
        error += part_error
    return QuadratureResult(value, error)


def psi_hat_deriv(k, x):
    """ The k-th derivative of the transform of psi:
        (-2 pi i)^k times the integral of t^k psi(t) e(-t x).
    """
    value, error = complex(0, 0), 0.0
    for lo, hi in _panels(PSI_SPEC):
        part, part_error = _weighted(lambda t: t ** k * psi(t), lo, hi,
            2 * math.pi * x)
        value += part
        error += part_error
    scale = (-2j * math.pi) ** k
    return QuadratureResult(scale * value, abs(scale) * error)


def psi_hat_decay(frequencies):
    """ Largest |psi_hat(lambda)| * exp(sqrt(|lambda|)/2) over `frequencies`. """
    return max(abs(psi_hat(f).value) * math.exp(math.sqrt(abs(f)) / 2)
        for f in frequencies)


def psi_hat_deriv_decay(k, points):
    """ Largest |psi_hat^(k)(x)| * max(1, |x|^k) over `points`. """
    return max(abs(psi_hat_deriv(k, x).value) * max(1.0, abs(x) ** k)
        for x in points)


def F_delta(delta, t):
    """ Mellin transform of f_delta at it, as the integral over v = ln u of
        f_delta(e^v) e^(itv); the plateau [2 delta, 1] is done in closed form.
    """
    spec = f_delta_spec(delta)
    function = lambda v: sigma(spec, math.exp(v))
    low, knee = math.log(delta), math.log(2 * delta)
    top = math.log(1 + delta)
    head, e1 = _weighted(function, low, knee, -t)
    tail, e2 = _weighted(function, 0.0, top, -t)
    if t == 0:
        plateau = complex(-knee, 0.0)
    else:
        plateau = (1 - cmath.exp(1j * t * knee)) / (1j * t)
    return QuadratureResult(head + plateau + tail, e1 + e2)


def mellin_bound_scan(delta, ts):
    """ Largest |F_delta(it)| * delta * t^2 over t in `ts` with |t| >= 1, and
        largest |F_delta(it)| / ln(1/delta) over all of `ts`.
    """
    large, small = 0.0, 0.0
    for t in ts:
        size = abs(F_delta(delta, t).value)
        small = max(small, size / math.log(1 / delta))
        if abs(t) >= 1:
            large = max(large, size * delta * t * t)
    return large, small


def mellin_inversion_check(delta, T, u):
    """ Compares f_delta(u) with the inversion integral truncated to
        [-T, T]. After exchanging the integrals the truncated inversion is
        the integral of f_delta(e^w) against sin(T s)/(pi s), s = w - ln u.

        :returns: ``(exact, reconstructed, exact - reconstructed)``.
    """
    if not 0 < delta < 0.5 or T < 10 or u <= 0:
        raise PreconditionViolated('need 0 < delta < 1/2, T >= 10, u > 0')
    spec = f_delta_spec(delta)
    centre = math.log(u)
    kernel = lambda w: sigma(spec, math.exp(w)) * T / math.pi * \
        numpy.sinc(T * (w - centre) / math.pi)
    low, knee = math.log(delta), math.log(2 * delta)
    top = math.log(1 + delta)
    pieces = []
    for lo, hi in ((low, knee), (0.0, top)):
        points = [centre] if lo < centre < hi else None
        pieces.append(_quad(kernel, lo, hi, points = points,
            limit = 20 * settings.QUAD_LIMIT)[0])
    sine_lo, _ = special.sici(T * (knee - centre))
    sine_hi, _ = special.sici(T * (0.0 - centre))
    pieces.append((sine_hi - sine_lo) / math.pi)
    exact = f_delta(delta, u)
    reconstructed = math.fsum(pieces)
    return exact, reconstructed, exact - reconstructed


def mellin_inversion_direct(delta, T, u):
    """ The truncated inversion integral taken over t directly; only
        practical for small T.
    """
    centre = math.log(u)

    def integrand(t):
        value = F_delta(delta, t).value * cmath.exp(-1j * t * centre)
        return value.real

    return _quad(integrand, 0.0, T, limit = 10 * settings.QUAD_LIMIT)[0] / \
        math.pi


@dataclass(frozen = True)
class PoissonCheck(object):
    lhs: float
    rhs: float


    @property
    def diff(self):
        return self.lhs - self.rhs


def psi_window(M):
    """ The integers m for which psi(m/M) can be non-zero. """
    first = int(math.floor(M / 2)) + 1
    last = int(math.ceil(5 * M / 2)) - 1
    return first, last


def poisson_check_progression(q, a, M, H = None):
    """ Sum of psi(m/M) over m = a (mod q) against its Poisson expansion
        truncated at 1 <= |m| <= H. Frequencies beyond 10^4 are dropped; their
        transform values are below 1e-20.

        :raises PreconditionViolated: unless q >= 2, 0 <= a < q,
            M > exp(sqrt(2 ln q)) and H >= (5q/M)(ln M)^4.
    """
    minimum = 5 * q / M * math.log(M) ** 4
    if H is None:
        H = int(math.ceil(minimum))
    if q < 2 or not 0 <= a < q or M <= math.exp(math.sqrt(2 * math.log(q))) \
            or H < minimum:
        raise PreconditionViolated('progression check needs q >= 2, '
            '0 <= a < q, M > exp(sqrt(2 ln q)), H >= %.3f' % minimum)
    first, last = psi_window(M)
    start = first + (a - first) % q
    lhs = math.fsum(psi(m / M) for m in range(start, last + 1, q))
    main = M * psi_hat(0).value.real / q
    terms = []
    for m in range(1, H + 1):
        frequency = m * M / q
        if frequency > PSI_HAT_LIMIT:
            break
        terms.append((psi_hat(frequency).value *
            cmath.exp(2j * math.pi * m * a / q)).real)
    rhs = main + 2 * M / q * math.fsum(terms)
    return PoissonCheck(lhs, rhs)


def poisson_check_coprime(q, M):
    """ Sum of psi(m/M) over m coprime to q against phi(q) M psi_hat(0) / q.

        :returns: (check, |diff| / (tau(q) (ln M)^2)).
    """
    first, last = psi_window(M)
    lhs = math.fsum(psi(m / M) for m in range(first, last + 1)
        if math.gcd(m, q) == 1)
    f = factorize(q)
    check = PoissonCheck(lhs, phi_of(f) * M * psi_hat(0).value.real / q)
    return check, abs(check.diff) / (tau_of(f) * math.log(M) ** 2)


def poisson_identity_check(H, x):
    """ Sum over n of psi((n + x)/H) against H times the sum over m of
        psi_hat(Hm) e(mx).
    """
    first = int(math.floor(H / 2 - x))
    last = int(math.ceil(5 * H / 2 - x))
    lhs = math.fsum(psi((n + x) / H) for n in range(first, last + 1))
    terms = [psi_hat(0).value.real]
    m = 1
    while H * m <= PSI_HAT_LIMIT:
        terms.append(2 * (psi_hat(H * m).value *
            cmath.exp(2j * math.pi * m * x)).real)
        m += 1
    return PoissonCheck(lhs, H * math.fsum(terms))
