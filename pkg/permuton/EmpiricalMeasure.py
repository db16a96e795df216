# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import numpy as np

from permuton.Permutation import PermutationException


class EmpiricalMeasure(object):
    """
    The uniform measure on n points of the unit square: either the points
    (i/n, p(i)/n) of one permutation or the points (p(i)/n, t(i)/n) of a pair.
    """

    def __init__(self, x_values, y_values, n):
        self._xs = np.asarray(x_values, dtype=np.int64) / float(n)
        self._ys = np.asarray(y_values, dtype=np.int64) / float(n)
        self._n = n

    @staticmethod
    def for_permutation(p):
        return EmpiricalMeasure(np.arange(1, p.n + 1), p.map, p.n)

    @staticmethod
    def for_pair(p, t):
        if p.n != t.n:
            raise PermutationException('Cannot pair permutations of sizes %d and %d' % (p.n, t.n))
        return EmpiricalMeasure(p.map, t.map, p.n)

    @property
    def n(self):
        return self._n

    def count(self, rect):
        return int(np.count_nonzero(rect.contains(self._xs, self._ys)))

    def mass(self, rect):
        return self.count(rect) / float(self._n)

    def mean(self, f):
        """(1/n) times the sum of f over the points; f takes coordinate arrays."""
        values = np.broadcast_to(np.asarray(f(self._xs, self._ys), dtype=float), self._xs.shape)
        return float(values.sum() / self._n)
