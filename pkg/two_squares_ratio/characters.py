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

""" Dirichlet characters stored as index vectors over prime-power components.

    The unit group modulo q is split into cyclic factors: one per odd prime
    power p^a (generated by the smallest primitive root of p^a) and, for the
    power of two, the factor generated by -1 (when 4 | q) and the factor
    generated by 5 (when 8 | q), so every unit n is (-1)^g0 * 5^g1 modulo
    the power of two. A character is the tuple of its indices on these
    factors; its value at n is exp(2 pi i theta(n)) where the angle theta(n)
    is an exact rational.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Python
import cmath
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Numerical
import numpy
from sympy.ntheory import primitive_root

# Two Squares Ratio Lab
from .conf import settings
from .arith import factorize, mod_inv
from .exceptions import (
    ModulusTooLarge, NotPrimitive, PreconditionViolated, RangeTooLarge)
from .sieve import sieve_h


LOGGER = logging.getLogger(__name__)

EXACT_ROOTS = {
    Fraction(0): complex(1, 0),
    Fraction(1, 4): complex(0, 1),
    Fraction(1, 2): complex(-1, 0),
    Fraction(3, 4): complex(0, -1),
}


def root_of_unity(angle):
    """ exp(2 pi i angle), exact on the quarter turns. """
    angle = angle % 1
    if angle in EXACT_ROOTS:
        return EXACT_ROOTS[angle]
    return cmath.rect(1.0, 2 * math.pi * angle)


@dataclass(frozen = True)
class CyclicFactor(object):
    """ One cyclic factor of the unit group: `generator` (lifted modulo the
        full modulus) has order `order` on the prime power `local_modulus`.
    """
    prime: int
    local_modulus: int
    order: int
    local_generator: int
    generator: int


def _local_logs(prime, local_modulus, generator, order, sign_part = None):
    # Discrete logarithms on a prime power, -1 marks non-units.
    table = numpy.full(local_modulus, -1, dtype = numpy.int64)
    if sign_part == 'minus':
        for n in range(1, local_modulus, 2):
            table[n] = 0 if n % 4 == 1 else 1
        return table
    value = 1
    for k in range(order):
        table[value] = k
        value = value * generator % local_modulus
    if sign_part == 'five':
        # n = +-5^k: the -1 part is carried by the other factor.
        for n in range(1, local_modulus, 2):
            if table[n] < 0:
                table[n] = table[local_modulus - n]
    return table


class UnitGroup(object):
    """ The unit group modulo q with its cyclic factors and a log table. """

    def __init__(self, modulus):
        self.modulus = modulus
        self.factors = []
        kinds = []
        for p, e in factorize(modulus).factors if modulus > 1 else ():
            local = p ** e
            if p == 2:
                if e >= 2:
                    self.factors.append(self._factor(2, local, 2, local - 1))
                    kinds.append('minus')
                if e >= 3:
                    self.factors.append(self._factor(2, local, local // 4, 5))
                    kinds.append('five')
            else:
                g = primitive_root(local)
                self.factors.append(self._factor(p, local, local // p * (p - 1),
                    g))
                kinds.append(None)
        self.exponent = 1
        for factor in self.factors:
            self.exponent = self.exponent * factor.order // math.gcd(
                self.exponent, factor.order)
        residues = numpy.arange(modulus, dtype = numpy.int64)
        self.units = numpy.gcd(residues, modulus) == 1
        self.logs = numpy.zeros((modulus, len(self.factors)), dtype = numpy.int64)
        for column, (factor, kind) in enumerate(zip(self.factors, kinds)):
            local = _local_logs(factor.prime, factor.local_modulus,
                factor.local_generator, factor.order, kind)
            self.logs[:, column] = local[residues % factor.local_modulus]
        self.logs[~self.units] = -1


    def _factor(self, prime, local_modulus, order, local_generator):
        rest = self.modulus // local_modulus
        if rest == 1:
            lifted = local_generator % local_modulus
        else:
            # g mod local_modulus and 1 mod the rest.
            lifted = (local_generator * rest * mod_inv(rest, local_modulus) +
                local_modulus * mod_inv(local_modulus, rest)) % self.modulus
        return CyclicFactor(prime, local_modulus, order, local_generator, lifted)


    @property
    def orders(self):
        return tuple(factor.order for factor in self.factors)


@lru_cache(maxsize = 512)
def unit_group(modulus):
    if modulus < 1:
        raise ValueError('modulus must be positive, got %r' % modulus)
    if modulus > settings.MAX_MODULUS:
        raise ModulusTooLarge('modulus %d above %d' % (modulus,
            settings.MAX_MODULUS))
    return UnitGroup(modulus)


class DirichletCharacter(object):
    """ A Dirichlet character modulo :attr:`modulus` given by its index on
        every cyclic factor of the unit group.

        Instances are immutable; the residue tables behind evaluation are
        built lazily and cached on the instance.
    """

    def __init__(self, modulus, indices):
        self.modulus = modulus
        self.group = unit_group(modulus)
        if len(indices) != len(self.group.factors):
            raise ValueError('expected %d indices, got %d' % (
                len(self.group.factors), len(indices)))
        self.indices = tuple(int(i) % factor.order
            for i, factor in zip(indices, self.group.factors))
        self._numerators = None
        self._values = None


    def __repr__(self):
        return 'DirichletCharacter(%d, %r)' % (self.modulus, self.indices)


    def __eq__(self, other):
        return isinstance(other, DirichletCharacter) and \
            self.modulus == other.modulus and self.indices == other.indices


    def __hash__(self):
        return hash((self.modulus, self.indices))


    @classmethod
    def from_angles(cls, modulus, angle):
        """ Builds the character modulo `modulus` whose angle at every unit is
            ``angle(n)``; `angle` must be a character angle (a homomorphism
            into Q/Z), only its values at the factor generators are read.
        """
        group = unit_group(modulus)
        indices = []
        for factor in group.factors:
            scaled = Fraction(angle(factor.generator)) % 1 * factor.order
            if scaled.denominator != 1:
                raise ValueError('angle %s is not a character value of order %d'
                    % (scaled / factor.order, factor.order))
            indices.append(int(scaled))
        return cls(modulus, indices)


    @property
    def numerators(self):
        """ Angles over all residues as numerators over the group exponent;
            -1 at non-units.
        """
        if self._numerators is None:
            exponent = self.group.exponent
            weights = numpy.array([index * (exponent // factor.order)
                for index, factor in zip(self.indices, self.group.factors)],
                dtype = numpy.int64)
            numerators = numpy.mod(self.group.logs @ weights, exponent) \
                if len(weights) else numpy.zeros(self.modulus, dtype = numpy.int64)
            numerators[~self.group.units] = -1
            numerators.setflags(write = False)
            self._numerators = numerators
        return self._numerators


    def angle(self, n):
        """ Exact angle at `n` in [0, 1), or None when gcd(n, q) > 1. """
        numerator = int(self.numerators[n % self.modulus])
        if numerator < 0:
            return None
        return Fraction(numerator, self.group.exponent)


    def __call__(self, n):
        angle = self.angle(n)
        if angle is None:
            return complex(0, 0)
        return root_of_unity(angle)


    def values(self):
        """ Complex values over the residues 0 .. q-1. """
        if self._values is None:
            values = numpy.zeros(self.modulus, dtype = numpy.complex128)
            units = self.numerators >= 0
            turns = self.numerators[units] / self.group.exponent
            values[units] = numpy.exp(2j * numpy.pi * turns)
            for angle, exact in EXACT_ROOTS.items():
                exact_numerator = angle * self.group.exponent
                if exact_numerator.denominator == 1:
                    values[self.numerators == int(exact_numerator)] = exact
            values.setflags(write = False)
            self._values = values
        return self._values


    @property
    def is_principal(self):
        return not any(self.indices)


    @property
    def order(self):
        result = 1
        for index, factor in zip(self.indices, self.group.factors):
            part = factor.order // math.gcd(index, factor.order)
            result = result * part // math.gcd(result, part)
        return result


    def induced_by(self, divisor):
        """ True when a character modulo `divisor` induces this one, i.e. the
            character is trivial on units congruent to 1 modulo `divisor`.
        """
        if self.modulus % divisor:
            return False
        numerators = self.numerators[1::divisor]
        return bool(numpy.all(numerators <= 0))


    def conductor(self):
        """ Smallest divisor of the modulus inducing this character, found by
            trying every divisor in increasing order.
        """
        for divisor in factorize(self.modulus).divisors():
            if self.induced_by(divisor):
                return divisor
        return self.modulus


    def is_primitive(self):
        return self.conductor() == self.modulus


    def primitive(self):
        """ The primitive character inducing this one. """
        conductor = self.conductor()

        def angle(n):
            lift = n
            while math.gcd(lift, self.modulus) != 1:
                lift += conductor
            return self.angle(lift)

        return DirichletCharacter.from_angles(conductor, angle)


    def __mul__(self, other):
        modulus = self.modulus * other.modulus // math.gcd(self.modulus,
            other.modulus)

        def angle(n):
            return self.angle(n) + other.angle(n)

        return DirichletCharacter.from_angles(modulus, angle)


def enumerate_characters(modulus):
    """ All phi(q) characters modulo q, the principal one first.

        :raises ModulusTooLarge: above ``settings.MAX_MODULUS``.
    """
    group = unit_group(modulus)
    return [DirichletCharacter(modulus, indices)
        for indices in itertools.product(*[range(order)
            for order in group.orders])]


def principal_character(modulus):
    return DirichletCharacter(modulus, (0, ) * len(unit_group(modulus).factors))


def chi4_character():
    """ The non-principal character modulo 4. """
    return DirichletCharacter(4, (1, ))


def expected_conductor_times_chi4(modulus):
    """ Conductor of chi * chi4 for chi primitive modulo d >= 3: 4d for odd
        d, d/4 when 4 exactly divides d, and d when 8 | d.
    """
    if modulus % 2:
        return 4 * modulus
    if modulus % 8 == 4:
        return modulus // 4
    if modulus % 8 == 0:
        return modulus
    raise NotPrimitive('no primitive characters modulo %d' % modulus)


def times_chi4(character):
    """ The product of a primitive character modulo d >= 3 with chi4, as a
        character modulo lcm(d, 4), together with its conductor.

        :raises NotPrimitive: when `character` is not primitive.
    """
    if character.modulus < 3:
        raise PreconditionViolated('modulus must be at least 3')
    if not character.is_primitive():
        raise NotPrimitive('%r is not primitive' % (character, ))
    product = character * chi4_character()
    return product, product.conductor()


def char_h_sum(character, limit):
    """ Sum of chi(n)/h(n) over n <= limit with h(n) != 0, each component
        accumulated with exactly rounded summation.
    """
    if limit > settings.CHARACTER_SUM_LIMIT:
        raise RangeTooLarge("character sums limited to N <= %d" %
            settings.CHARACTER_SUM_LIMIT)
    if limit < 1:
        return complex(0, 0)
    table = sieve_h(1, limit + 1)
    n = numpy.arange(1, limit + 1, dtype = numpy.int64)
    nonzero = table.h_values != 0
    terms = character.values()[n[nonzero] % character.modulus] / \
        table.h_values[nonzero]
    return complex(math.fsum(terms.real), math.fsum(terms.imag))
