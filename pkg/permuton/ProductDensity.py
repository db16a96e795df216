# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import numpy as np

from permuton.DensityParams import DensityParams, RhoParams
from permuton.LimitDensity import DensityException, LimitDensity
from permuton.Quadrature import Quadrature
from permuton.Rect import Rect


class ProductDensity(object):
    """
    rho(x, y) = integral over t of u(x, t, beta) u(t, y, gamma), the density
    of the composition of independent Mallows permutations with parameters
    beta and gamma.
    """

    def __init__(self, params, quadrature=None):
        if not isinstance(params, RhoParams):
            raise DensityException('Expected RhoParams, got %r' % (params,))
        self._params = params
        self._quadrature = quadrature or Quadrature()
        self._first = LimitDensity(DensityParams(params.beta), self._quadrature)
        self._second = LimitDensity(DensityParams(params.gamma), self._quadrature)

    @property
    def params(self):
        return self._params

    def density(self, x, y):
        x = float(x)
        y = float(y)

        def integrand(t):
            return self._first.density(np.full_like(t, x), t) * self._second.density(t, np.full_like(t, y))

        return self._quadrature.integrate(integrand, 0.0, 1.0)

    def rect_mass(self, rect):
        """
        The mass of a rectangle, reduced to one integral over t by the
        symmetry u(x, t) = u(t, x):

            integral of [F_beta(t, x2) - F_beta(t, x1)] [F_gamma(t, y2) - F_gamma(t, y1)] dt
        """
        if not isinstance(rect, Rect):
            raise DensityException('Expected a Rect, got %r' % (rect,))
        if rect.x1 == rect.x2 or rect.y1 == rect.y2:
            return 0.0

        def integrand(t):
            first = self._first.cdf(t, np.full_like(t, rect.x2)) - self._first.cdf(t, np.full_like(t, rect.x1))
            second = self._second.cdf(t, np.full_like(t, rect.y2)) - self._second.cdf(t, np.full_like(t, rect.y1))
            return first * second

        return self._quadrature.integrate(integrand, 0.0, 1.0)
