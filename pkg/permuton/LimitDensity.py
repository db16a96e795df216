# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

"""
The limit density u(x, y, beta) of the point sets of Mallows permutations
with q = 1 - beta/n, its partial integrals and its rectangle masses.

Everything is evaluated in a rewritten form that only exponentiates
non-positive numbers. With b = |beta|/2 and

    D = |x - y|,  S = |x + y - 1|   (the two are swapped when beta < 0)

the density is

    u = 2 b (1 - e^(-2b)) e^(-2bD) / B**2,
    B = (1 - e^(-b(1 + D - S))) + e^(-2bD) (1 - e^(-b(1 - D + S))),

where both terms of B are non-negative and B > 0 on the whole square.
"""

import math

import numpy as np

from permuton.DensityParams import DensityParams
from permuton.helpers import PermutonException
from permuton.MallowsParams import ParameterException
from permuton.Quadrature import Quadrature
from permuton.Rect import Rect

# below this |beta| the first-order expansion in beta is exact to double precision
SMALL_BETA = 1e-6


class DensityException(PermutonException):
    pass


def _unit_interval(name, value):
    value = np.asarray(value, dtype=float)
    if np.any(~((value >= 0.0) & (value <= 1.0))):
        raise DensityException('%s must lie in [0, 1], got %r' % (name, value))
    return value


def _bracket(b, d, s):
    return -np.expm1(-b * (1.0 + d - s)) - np.exp(-2.0 * b * d) * np.expm1(-b * (1.0 - d + s))


class LimitDensity(object):
    def __init__(self, params, quadrature=None):
        if not isinstance(params, DensityParams):
            params = DensityParams(params)
        self._params = params
        self._quadrature = quadrature or Quadrature()

    @property
    def params(self):
        return self._params

    @property
    def beta(self):
        return self._params.beta

    def _distances(self, x, y):
        d = np.abs(x - y)
        s = np.abs(x + y - 1.0)
        # u(x, y, -beta) = u(x, 1 - y, beta) exchanges the two distances
        if self.beta < 0:
            return s, d
        return d, s

    def log_density(self, x, y):
        x = _unit_interval('x', x)
        y = _unit_interval('y', y)
        beta = self.beta
        if abs(beta) < SMALL_BETA:
            return _scalar(np.log1p(0.5 * beta * (2.0 * x - 1.0) * (2.0 * y - 1.0)))
        b = 0.5 * abs(beta)
        d, s = self._distances(x, y)
        bracket = _bracket(b, d, s)
        if np.any(~(bracket > 0)):
            raise DensityException('Density denominator vanished at x=%r, y=%r, beta=%r' % (x, y, beta))
        value = (math.log(b) + math.log(-math.expm1(-2.0 * b)) + math.log(2.0)
                 - 2.0 * b * d - 2.0 * np.log(bracket))
        return _scalar(value)

    def density(self, x, y):
        """u(x, y); both arguments may be arrays."""
        if abs(self.beta) < SMALL_BETA:
            x = _unit_interval('x', x)
            y = _unit_interval('y', y)
            return _scalar(1.0 + 0.5 * self.beta * (2.0 * x - 1.0) * (2.0 * y - 1.0))
        return _scalar(np.exp(self.log_density(x, y)))

    def cdf(self, a, y):
        """The partial integral of u(a, t) over t in [0, y]."""
        a = _unit_interval('a', a)
        y = _unit_interval('y', y)
        beta = self.beta
        if abs(beta) < SMALL_BETA:
            return _scalar(y + 0.5 * beta * (2.0 * a - 1.0) * (y * y - y))
        b = 0.5 * abs(beta)
        if beta > 0:
            value = 0.5 * (_closed_form(b, a, np.zeros_like(y)) - _closed_form(b, a, y))
        else:
            value = 1.0 - 0.5 * (_closed_form(b, a, np.zeros_like(y)) - _closed_form(b, a, 1.0 - y))
        return _scalar(np.clip(value, 0.0, 1.0))

    def rect_mass(self, rect):
        """The integral of u over a rectangle; the closure of its sides is irrelevant."""
        if not isinstance(rect, Rect):
            raise DensityException('Expected a Rect, got %r' % (rect,))
        if rect.x1 == rect.x2 or rect.y1 == rect.y2:
            return 0.0

        def strip(x):
            return self.cdf(x, np.full_like(x, rect.y2)) - self.cdf(x, np.full_like(x, rect.y1))

        return self._quadrature.integrate(strip, rect.x1, rect.x2)

    def rescaled_point(self, a, b, y):
        """
        The y' with cdf(a, y) at beta equal to cdf(a/b, y') at b * beta,
        namely the mass of [0, b] x [0, y] divided by b.
        """
        if not 0.0 <= a < b <= 1.0:
            raise ParameterException('Need 0 <= a < b <= 1, got a=%r, b=%r' % (a, b))
        _unit_interval('y', y)
        return min(1.0, max(0.0, self.rect_mass(Rect.closed(0.0, b, 0.0, y)) / b))


def _closed_form(b, x, y):
    """
    The function H with u(x, y) = -(1/2) dH/dy for beta = 2b > 0:

        sign(d)(1 - e^(-2b|d|)) - sign(s) e^(-b(1 + |d| - |s|)) (1 - e^(-2b|s|))
        ------------------------------------------------------------------------
                                         B

    with d = x - y and s = x + y - 1.
    """
    d = x - y
    s = x + y - 1.0
    ad = np.abs(d)
    as_ = np.abs(s)
    numerator = -np.sign(d) * np.expm1(-2.0 * b * ad) \
        + np.sign(s) * np.exp(-b * (1.0 + ad - as_)) * np.expm1(-2.0 * b * as_)
    return numerator / _bracket(b, ad, as_)


def _scalar(value):
    value = np.asarray(value)
    if value.ndim == 0:
        return float(value)
    return value
