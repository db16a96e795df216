# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import csv
import itertools
import logging
import math

import numpy as np

from permuton.helpers import PermutonException, format_real
from permuton.MallowsParams import MallowsParams
from permuton.Permutation import Permutation

logger = logging.getLogger(__name__)


class OracleException(PermutonException):
    pass


class ExactDistribution(object):
    """
    The Mallows measure P(p) = q**l(p) / Z on all of S_n, by enumeration.

    Permutations are held as the rows of an (n!, n) array in lexicographic
    order, so every marginal is a weighted count over rows.
    """

    MAX_N = 9

    def __init__(self, n, q, rows, inversions, weights):
        self._n = n
        self._q = q
        self._rows = rows
        self._inversions = inversions
        self._partition_sum = float(math.fsum(weights))
        self._probabilities = weights / self._partition_sum
        self._index = None

    @staticmethod
    def enumerate_measure(n, q):
        params = MallowsParams(n, q)
        if params.n > ExactDistribution.MAX_N:
            raise OracleException('Enumeration is limited to n <= %d, got n = %d' % (ExactDistribution.MAX_N, n))
        rows = np.array(list(itertools.permutations(range(1, params.n + 1))), dtype=np.int64).reshape(-1, params.n)
        inversions = ExactDistribution.brute_force_inversions(rows)
        weights = np.power(params.q, inversions.astype(float))
        logger.debug('Enumerated %d permutations for n=%d, q=%r', rows.shape[0], params.n, params.q)
        return ExactDistribution(params.n, params.q, rows, inversions, weights)

    @staticmethod
    def brute_force_inversions(rows):
        """Inversion numbers of the rows of a permutation array by scanning all pairs."""
        rows = np.asarray(rows, dtype=np.int64)
        total = np.zeros(rows.shape[0], dtype=np.int64)
        for i in range(rows.shape[1]):
            for j in range(i + 1, rows.shape[1]):
                total += rows[:, i] > rows[:, j]
        return total

    @staticmethod
    def brute_force_inversion_number(p):
        return int(ExactDistribution.brute_force_inversions(p.map[None, :])[0])

    @staticmethod
    def partition_function(n, q):
        """Z = prod over i of (1 + q + .. + q**(i-1))."""
        params = MallowsParams(n, q)
        return float(np.prod([math.fsum(params.q ** k for k in range(i)) for i in range(1, params.n + 1)]))

    @property
    def n(self):
        return self._n

    @property
    def q(self):
        return self._q

    @property
    def rows(self):
        return self._rows

    @property
    def probabilities(self):
        return self._probabilities

    @property
    def inversions(self):
        return self._inversions

    @property
    def partition_sum(self):
        """Z as the plain sum of q**l(p) over S_n."""
        return self._partition_sum

    def probability(self, p):
        if self._index is None:
            self._index = dict((tuple(int(v) for v in row), k) for k, row in enumerate(self._rows))
        key = p.as_tuple()
        if key not in self._index:
            raise OracleException('%r is not a permutation of size %d' % (p, self._n))
        return float(self._probabilities[self._index[key]])

    def table(self):
        """The distribution as a map from value tuples to probabilities."""
        return dict((tuple(int(v) for v in row), float(prob)) for row, prob in zip(self._rows, self._probabilities))

    def _check_index(self, i, name='index'):
        if not 1 <= i <= self._n:
            raise OracleException('%s %r is outside 1..%d' % (name, i, self._n))

    def point_marginal(self, i):
        """The vector (P(p(i) = 1), .., P(p(i) = n))."""
        self._check_index(i)
        return np.bincount(self._rows[:, i - 1] - 1, weights=self._probabilities, minlength=self._n)

    def marginal_matrix(self):
        """M[s-1, v-1] = P(p(s) = v)."""
        return np.array([self.point_marginal(s) for s in range(1, self._n + 1)])

    def pair_table(self, s, w):
        """J[i-1, j-1] = P(p(s) = i and p(w) = j)."""
        self._check_index(s)
        self._check_index(w)
        if s == w:
            raise OracleException('Positions of a pair must differ, got %d twice' % s)
        cells = (self._rows[:, s - 1] - 1) * self._n + self._rows[:, w - 1] - 1
        return np.bincount(cells, weights=self._probabilities, minlength=self._n ** 2).reshape(self._n, self._n)

    def pair_probability(self, s, w, i, j):
        self._check_index(i, 'value')
        self._check_index(j, 'value')
        if i == j:
            raise OracleException('Values of a pair must differ, got %d twice' % i)
        return float(self.pair_table(s, w)[i - 1, j - 1])

    def _indicators(self, interval):
        lo, hi = interval
        return (self._rows >= lo) & (self._rows <= hi)

    def interval_probability(self, i, interval):
        """P(lo <= p(i) <= hi) for the value bounds interval = (lo, hi)."""
        self._check_index(i)
        return float(self._probabilities[self._indicators(interval)[:, i - 1]].sum())

    def covariance_matrix(self, interval_a, interval_b=None):
        """C[s-1, w-1] = Cov(1_A(p(s)), 1_B(p(w))); the diagonal is not meaningful."""
        x = self._indicators(interval_a).astype(float)
        y = x if interval_b is None else self._indicators(interval_b).astype(float)
        joint = x.T.dot(y * self._probabilities[:, None])
        return joint - np.outer(self._probabilities.dot(x), self._probabilities.dot(y))

    def indicator_covariance(self, interval, i, j):
        return self.pair_interval_covariance(interval, interval, i, j)

    def pair_interval_covariance(self, interval_a, interval_b, s, w):
        self._check_index(s)
        self._check_index(w)
        if s == w:
            raise OracleException('Covariance needs two different positions, got %d twice' % s)
        return float(self.covariance_matrix(interval_a, interval_b)[s - 1, w - 1])

    def max_indicator_covariance(self, interval_a, interval_b=None):
        """The largest |Cov| over ordered pairs of different positions, with its pair."""
        if self._n < 2:
            return 0.0, None
        covariance = np.abs(self.covariance_matrix(interval_a, interval_b))
        np.fill_diagonal(covariance, -1.0)
        s, w = np.unravel_index(np.argmax(covariance), covariance.shape)
        return float(covariance[s, w]), (int(s) + 1, int(w) + 1)

    def pushforward(self, f):
        """The image distribution under f: Permutation -> Permutation, as a table."""
        image = {}
        for row, prob in zip(self._rows, self._probabilities):
            key = f(Permutation(row, validate=False)).as_tuple()
            image[key] = image.get(key, 0.0) + float(prob)
        return image

    @staticmethod
    def tv_distance(first, second):
        """
        Half the L1 distance between two distributions over S_n, given as
        ExactDistributions or tables; missing permutations have probability 0.
        """
        first = first.table() if isinstance(first, ExactDistribution) else first
        second = second.table() if isinstance(second, ExactDistribution) else second
        sizes = set(len(key) for key in first) | set(len(key) for key in second)
        if len(sizes) > 1:
            raise OracleException('Tables range over permutations of different sizes %r' % sorted(sizes))
        keys = set(first) | set(second)
        return 0.5 * math.fsum(abs(first.get(key, 0.0) - second.get(key, 0.0)) for key in keys)

    def to_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['permutation', 'probability'])
        for row, prob in zip(self._rows, self._probabilities):
            writer.writerow([','.join(str(int(v)) for v in row), format_real(prob)])
