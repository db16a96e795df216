# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import functools
import logging

import numpy as np

from permuton.helpers import PermutonException

logger = logging.getLogger(__name__)


class QuadratureException(PermutonException):
    pass


@functools.lru_cache(maxsize=None)
def _legendre_rule(order):
    return np.polynomial.legendre.leggauss(order)


class Quadrature(object):
    """
    Adaptive composite Gauss-Legendre quadrature for smooth integrands.

    An interval is accepted when the rule on the whole interval agrees with
    the rule on its two halves to within a share of ``abs_tol`` proportional
    to its length; otherwise both halves are refined. Integrands must accept
    a numpy array of abscissas.
    """

    def __init__(self, abs_tol=1e-12, order=20, max_subdivisions=2000):
        if abs_tol <= 0:
            raise QuadratureException('abs_tol must be positive, got %r' % (abs_tol,))
        self._abs_tol = float(abs_tol)
        self._order = int(order)
        self._max_subdivisions = int(max_subdivisions)

    @property
    def abs_tol(self):
        return self._abs_tol

    def _rule(self, f, a, b):
        nodes, weights = _legendre_rule(self._order)
        half = 0.5 * (b - a)
        values = np.asarray(f(half * nodes + 0.5 * (a + b)), dtype=float)
        return half * float(np.dot(weights, values))

    def integrate(self, f, a, b):
        """The integral of f over [a, b]."""
        if a == b:
            return 0.0
        if a > b:
            return -self.integrate(f, b, a)
        length = float(b - a)
        total = 0.0
        subdivisions = 0
        pending = [(a, b, self._rule(f, a, b))]
        while pending:
            lo, hi, whole = pending.pop()
            mid = 0.5 * (lo + hi)
            left = self._rule(f, lo, mid)
            right = self._rule(f, mid, hi)
            if abs(left + right - whole) <= self._abs_tol * (hi - lo) / length or hi - lo < 1e-15:
                total += left + right
                continue
            subdivisions += 1
            if subdivisions > self._max_subdivisions:
                raise QuadratureException('No convergence on [%r, %r] after %d subdivisions'
                                          % (a, b, self._max_subdivisions))
            pending.append((lo, mid, left))
            pending.append((mid, hi, right))
        if not np.isfinite(total):
            raise QuadratureException('Integral over [%r, %r] is not finite' % (a, b))
        logger.debug('Integrated over [%r, %r] with %d subdivisions', a, b, subdivisions)
        return total
