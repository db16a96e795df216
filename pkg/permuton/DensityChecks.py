# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

"""
Numerical checks of identities satisfied by the limit densities.
"""

import numpy as np

from permuton.Check import Check
from permuton.DensityParams import RhoParams
from permuton.LimitDensity import LimitDensity
from permuton.ProductDensity import ProductDensity
from permuton.Quadrature import Quadrature
from permuton.Rect import Rect


class DensityCheck(Check):
    min_n = 0

    def __init__(self, betas=None, quadrature=None):
        Check.__init__(self)
        if betas is not None:
            self.betas = tuple(betas)
        self._quadrature = quadrature or Quadrature()

    def density(self, beta):
        return LimitDensity(beta, self._quadrature)


class DensityMarginalCheck(DensityCheck):
    """Both marginals of u are uniform and u is symmetric in x and y."""

    name = 'density_marginals'
    betas = (-10.0, -2.0, -0.5, 0.0, 0.5, 2.0, 10.0)
    points = 101
    tolerance = 1e-9

    def run(self):
        result = Check.run(self)
        ys = np.linspace(0.0, 1.0, self.points)
        violations = 0
        worst = 0.0
        for beta in self.betas:
            density = self.density(beta)
            marginal_gap = np.abs(density.cdf(ys, np.ones_like(ys)) - 1.0).max()
            x, y = np.meshgrid(ys[::10], ys[::10])
            symmetry_gap = np.abs(density.density(x, y) - density.density(y, x)).max()
            quadrature_gap = max(abs(self._quadrature.integrate(lambda t: density.density(t, np.full_like(t, y0)),
                                                                0.0, 1.0) - 1.0)
                                 for y0 in ys[::25])
            gap = max(marginal_gap, symmetry_gap, quadrature_gap)
            worst = max(worst, gap)
            if gap > self.tolerance:
                result.add_error('beta=%g: marginal gap %.3g' % (beta, gap))
                violations += 1
        result.add_message('largest gap %.3g' % worst)
        return Check.finish(result, violations, len(self.betas), 'marginal identities')


class LogDensityEquationCheck(DensityCheck):
    """The mixed derivative of ln u equals 2 beta u, by central differences on an interior grid."""

    name = 'log_density_equation'
    betas = (-5.0, -2.0, -0.5, 0.5, 2.0, 5.0)
    step = 1e-4
    tolerance = 1e-5

    def run(self):
        result = Check.run(self)
        grid = np.linspace(0.1, 0.9, 9)
        x, y = np.meshgrid(grid, grid)
        h = self.step
        violations = 0
        worst = 0.0
        for beta in self.betas:
            density = self.density(beta)
            mixed = (density.log_density(x + h, y + h) - density.log_density(x + h, y - h)
                     - density.log_density(x - h, y + h) + density.log_density(x - h, y - h)) / (4.0 * h * h)
            expected = 2.0 * beta * density.density(x, y)
            relative = np.abs(mixed - expected) / np.abs(expected)
            violations += int(np.count_nonzero(relative > self.tolerance))
            worst = max(worst, float(relative.max()))
        result.add_message('largest relative error %.3g' % worst)
        return Check.finish(result, violations, len(self.betas) * grid.size ** 2, 'grid points')


class RandomTupleCheck(DensityCheck):
    count = 100
    seed = 20240229
    tolerance = 1e-8
    beta_range = 5.0

    def draws(self):
        rng = np.random.default_rng(self.seed)
        return rng.random((self.count, 3)), rng.uniform(-self.beta_range, self.beta_range, self.count)

    def gap(self, point, beta):
        raise NotImplementedError

    def run(self):
        result = Check.run(self)
        points, betas = self.draws()
        gaps = np.array([self.gap(point, beta) for point, beta in zip(points, betas)])
        result.add_message('largest gap %.3g' % gaps.max())
        return Check.finish(result, int(np.count_nonzero(gaps > self.tolerance)), self.count, 'random tuples')


class LogRatioCheck(RandomTupleCheck):
    """
    -beta * (integral over y in [c, d] of (mass of x > a) - (mass of x < a))
    equals ln u(a, d) - ln u(a, c).
    """

    name = 'log_ratio_identity'

    def gap(self, point, beta):
        a, c, d = point
        density = self.density(beta)
        low, high = min(c, d), max(c, d)
        inner = density.rect_mass(Rect.closed(0.0, a, low, high)) * (1.0 if d >= c else -1.0)
        left = -beta * ((d - c) - 2.0 * inner)
        right = density.log_density(a, d) - density.log_density(a, c)
        return abs(left - right)


class ScalingCheck(RandomTupleCheck):
    """The partial integral at (a, y) for beta equals the one at (a/b, y') for b * beta."""

    name = 'scaling_identity'

    def gap(self, point, beta):
        a, b = sorted(point[:2])
        if a == b:
            return 0.0
        y = point[2]
        density = self.density(beta)
        rescaled = density.rescaled_point(a, b, y)
        return abs(density.cdf(a, y) - self.density(b * beta).cdf(a / b, rescaled))


class ProductMarginalCheck(DensityCheck):
    """rho has uniform marginals and collapses to 1 when gamma = 0."""

    name = 'product_marginals'
    pairs = ((2.0, -1.0), (-3.0, 4.0))
    points = 21
    tolerance = 1e-8

    def __init__(self, pairs=None, quadrature=None):
        DensityCheck.__init__(self, quadrature=quadrature)
        if pairs is not None:
            self.pairs = tuple(pairs)

    def run(self):
        result = Check.run(self)
        grid = np.linspace(0.0, 1.0, self.points)
        violations = 0
        worst = 0.0
        for beta, gamma in self.pairs:
            rho = ProductDensity(RhoParams(beta, gamma), self._quadrature)
            collapsed = ProductDensity(RhoParams(beta, 0.0), self._quadrature)
            for z in grid:
                column = self._quadrature.integrate(np.vectorize(lambda x: rho.density(x, z)), 0.0, 1.0)
                row = self._quadrature.integrate(np.vectorize(lambda y: rho.density(z, y)), 0.0, 1.0)
                gaps = (abs(column - 1.0), abs(row - 1.0), abs(collapsed.density(z, 0.5) - 1.0))
                worst = max(worst, max(gaps))
                violations += sum(1 for gap in gaps if gap > self.tolerance)
        result.add_message('largest gap %.3g' % worst)
        return Check.finish(result, violations, 3 * len(self.pairs) * grid.size, 'product density identities')
