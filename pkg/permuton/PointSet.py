# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import numpy as np

from permuton.helpers import PermutonException, count_inversions
from permuton.Permutation import Permutation


class PointSetException(PermutonException):
    pass


class PointSet(object):
    """
    A finite set of points in [0,1]^2 in which no two points share an x or a
    y coordinate.
    """

    def __init__(self, xs, ys):
        xs = np.asarray(xs, dtype=float).reshape(-1)
        ys = np.asarray(ys, dtype=float).reshape(-1)
        if xs.size != ys.size:
            raise PointSetException('Got %d x coordinates and %d y coordinates' % (xs.size, ys.size))
        if xs.size == 0:
            raise PointSetException('A point set needs at least one point')
        if np.unique(xs).size != xs.size or np.unique(ys).size != ys.size:
            raise PointSetException('Points must have distinct x and distinct y coordinates')
        self._xs = xs
        self._ys = ys

    @staticmethod
    def from_pairs(pairs):
        pairs = np.asarray(pairs, dtype=float).reshape(-1, 2)
        return PointSet(pairs[:, 0], pairs[:, 1])

    @property
    def xs(self):
        return self._xs

    @property
    def ys(self):
        return self._ys

    def __len__(self):
        return self._xs.size

    def induce(self):
        """
        The permutation p with p(i) = j when the point with the i-th smallest
        x has the j-th smallest y.
        """
        ys_by_x = self._ys[np.argsort(self._xs)]
        ranks = np.empty(ys_by_x.size, dtype=np.int64)
        ranks[np.argsort(ys_by_x)] = np.arange(1, ys_by_x.size + 1)
        return Permutation(ranks, validate=False)

    def point_inversions(self):
        """The number of pairs of points where one is above and to the left of the other."""
        return count_inversions(self.induce().map - 1)
