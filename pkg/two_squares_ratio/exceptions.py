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

""" Two Squares Ratio Lab exceptions.
"""

__status__ = "beta"
__version__ = "1.0.0"
__maintainer__ = (u"Two Squares Ratio Lab contributors", )
__author__ = (u"Two Squares Ratio Lab contributors", )

# Django
from django.core import exceptions as django_exceptions


class RatioLabError(Exception):
    """ Base class of every error raised by this package. """


class ImproperlyConfigured(RatioLabError,
        django_exceptions.ImproperlyConfigured):
    """ A run or settings parameter cannot be verified. """


class NotCoprime(RatioLabError, ValueError):
    pass


class BadShape(RatioLabError, ValueError):
    pass


class ModulusTooLarge(RatioLabError, ValueError):
    pass


class NotPrimitive(RatioLabError, ValueError):
    pass


class RangeTooLarge(RatioLabError, ValueError):
    pass


class DerivOrderTooHigh(RatioLabError, ValueError):
    pass


class PreconditionViolated(RatioLabError, ValueError):
    pass


class SizeTooLarge(RatioLabError, ValueError):
    pass


class MissingGolden(RatioLabError, IOError):
    pass


class _NoSolution(object):
    """ Sentinel returned when a congruence system is incompatible. """

    def __repr__(self):
        return 'NoSolution'


    def __bool__(self):
        return False


NoSolution = _NoSolution()
