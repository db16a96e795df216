# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

"""
Exact checks of identities and inequalities of the Mallows measure on S_n,
computed from the enumerated distribution.
"""

import itertools
import math

import numpy as np

from permuton.Check import PROBABILITY_TOLERANCE, Check
from permuton.ExactDistribution import ExactDistribution
from permuton.LehmerCode import LehmerCode
from permuton.MallowsSampler import truncated_geometric_pmf


def ratio_bound(q, d):
    """max(q**d, q**-d), elementwise in d."""
    return np.exp(abs(math.log(q)) * np.asarray(d, dtype=float))


def difference_bound(q, d):
    """max(|1 - q**d|, |1 - q**-d|), elementwise in d."""
    d = np.asarray(d, dtype=float)
    return np.maximum(np.abs(1.0 - q ** d), np.abs(1.0 - q ** -d))


def table_difference(observed, expected):
    keys = set(observed) | set(expected)
    return max(abs(observed.get(key, 0.0) - expected.get(key, 0.0)) for key in keys)


def ratio_violations(numerator, denominator, d, q):
    """How many ratios leave [1/bound, bound], with bound = ratio_bound(q, d)."""
    upper = ratio_bound(q, d)
    ratio = numerator / denominator
    bad = (ratio > upper * (1.0 + PROBABILITY_TOLERANCE)) | (ratio * upper < 1.0 - PROBABILITY_TOLERANCE)
    return int(np.count_nonzero(bad))


def interval_bounds_index(n):
    """0-based (lo, hi) arrays of every value interval lo <= hi of {1..n}."""
    lo, hi = np.triu_indices(n)
    return lo, hi


class MallowsCheck(Check):
    def __init__(self, n, q, distribution=None):
        Check.__init__(self, n, q)
        self._distribution = distribution

    def distribution(self):
        if self._distribution is None:
            self._distribution = ExactDistribution.enumerate_measure(self._n, self._q)
        return self._distribution


class ReversalInverseCheck(MallowsCheck):
    """Reversal maps the measure for q to the one for 1/q; inversion preserves it."""

    name = 'reversal_inverse'
    min_n = 2

    def run(self):
        result = Check.run(self)
        distribution = self.distribution()
        expected = distribution.table()
        reversed_gap = table_difference(distribution.pushforward(lambda p: p.reverse()),
                                        ExactDistribution.enumerate_measure(self._n, 1.0 / self._q).table())
        inverse_gap = table_difference(distribution.pushforward(lambda p: p.inverse()), expected)
        violations = int(reversed_gap > PROBABILITY_TOLERANCE) + int(inverse_gap > PROBABILITY_TOLERANCE)
        result.add_message('largest atom gap: reversal %.3g, inverse %.3g' % (reversed_gap, inverse_gap))
        return Check.finish(result, violations, 2, 'pushforward identities')


class RestrictionCheck(MallowsCheck):
    """
    For every split k, the patterns on positions 1..k and k+1..n are
    independent and Mallows distributed with the same q.
    """

    name = 'restriction'
    min_n = 2

    def run(self):
        result = Check.run(self)
        distribution = self.distribution()
        rows = distribution.rows
        probabilities = distribution.probabilities
        violations = 0
        worst = 0.0
        for k in range(1, self._n):
            left = Check.pattern_rows(rows[:, :k])
            right = Check.pattern_rows(rows[:, k:])
            joint, left_table, right_table = {}, {}, {}
            for a, b, prob in zip(map(tuple, left.tolist()), map(tuple, right.tolist()), probabilities):
                joint[(a, b)] = joint.get((a, b), 0.0) + prob
                left_table[a] = left_table.get(a, 0.0) + prob
                right_table[b] = right_table.get(b, 0.0) + prob
            product = dict(((a, b), left_table[a] * right_table[b]) for a in left_table for b in right_table)
            gaps = (table_difference(left_table, ExactDistribution.enumerate_measure(k, self._q).table()),
                    table_difference(right_table, ExactDistribution.enumerate_measure(self._n - k, self._q).table()),
                    table_difference(joint, product))
            worst = max(worst, max(gaps))
            violations += sum(1 for gap in gaps if gap > PROBABILITY_TOLERANCE)
        result.add_message('largest atom gap %.3g' % worst)
        return Check.finish(result, violations, 3 * (self._n - 1), 'restriction identities')


class MarginalRatioCheck(MallowsCheck):
    """P(p(i) = s) / P(p(i) = t) lies within max(q**d, q**-d) of 1 for d = |s - t|."""

    name = 'marginal_value_ratio'
    min_n = 2

    def marginals(self):
        return self.distribution().marginal_matrix()

    def run(self):
        result = Check.run(self)
        marginals = self.marginals()
        index = np.arange(self._n)
        d = np.abs(index[:, None] - index[None, :])[None, :, :]
        violations = ratio_violations(marginals[:, :, None], marginals[:, None, :], d, self._q)
        return Check.finish(result, violations, self._n ** 3, 'marginal ratios')


class PositionRatioCheck(MarginalRatioCheck):
    """P(p(s) = i) / P(p(t) = i) lies within max(q**d, q**-d) of 1 for d = |s - t|."""

    name = 'marginal_position_ratio'

    def marginals(self):
        return self.distribution().marginal_matrix().T


class PairRatioCheck(MallowsCheck):
    """
    P(p(s) = i, p(w) = j) / P(p(t) = i, p(w) = j) obeys the same bound when w
    lies outside [min(s, t), max(s, t)]. Ratios for w strictly between s and
    t are reported without being asserted.
    """

    name = 'pair_ratio'
    min_n = 3

    def run(self):
        result = Check.run(self)
        distribution = self.distribution()
        off_diagonal = ~np.eye(self._n, dtype=bool)
        log_q = abs(math.log(self._q))
        checked = 0
        violations = 0
        interior_cases = 0
        interior_above = 0
        interior_worst = 0.0
        tables = {}

        def table(s, w):
            if (s, w) not in tables:
                tables[(s, w)] = distribution.pair_table(s, w)[off_diagonal]
            return tables[(s, w)]

        for s, t, w in itertools.permutations(range(1, self._n + 1), 3):
            d = abs(s - t)
            if w < min(s, t) or w > max(s, t):
                checked += off_diagonal.sum()
                violations += ratio_violations(table(s, w), table(t, w), d, self._q)
                continue
            interior_cases += 1
            log_ratio = np.abs(np.log(table(s, w) / table(t, w)))
            excess = float(log_ratio.max()) - d * log_q
            interior_worst = max(interior_worst, excess)
            if excess > 1e-12:
                interior_above += 1
        result.add_message('interior positions: %d of %d triples exceed the bound, largest log excess %.6g'
                           % (interior_above, interior_cases, interior_worst))
        return Check.finish(result, violations, checked, 'pair ratios')


class IntervalDifferenceCheck(MallowsCheck):
    """|P(p(s) in A) - P(p(t) in A)| <= max(|1 - q**d|, |1 - q**-d|) for every value interval A."""

    name = 'interval_difference'
    min_n = 2

    def run(self):
        result = Check.run(self)
        marginals = self.distribution().marginal_matrix()
        cumulative = np.zeros((self._n, self._n + 1))
        cumulative[:, 1:] = marginals.cumsum(axis=1)
        lo, hi = interval_bounds_index(self._n)
        probabilities = cumulative[:, hi + 1] - cumulative[:, lo]
        index = np.arange(self._n)
        bound = difference_bound(self._q, np.abs(index[:, None] - index[None, :]))
        gaps = np.abs(probabilities[:, None, :] - probabilities[None, :, :])
        violations = int(np.count_nonzero(gaps > bound[:, :, None] + PROBABILITY_TOLERANCE))
        return Check.finish(result, violations, gaps.size, 'interval differences')


class PairIntervalDifferenceCheck(MallowsCheck):
    """
    |P(p(s) in A, p(w) in B) - P(p(t) in A, p(w) in B)| obeys the same bound
    for value intervals A and B when w lies outside [min(s, t), max(s, t)].
    """

    name = 'pair_interval_difference'
    min_n = 3

    def _interval_masses(self, s, w):
        prefix = np.zeros((self._n + 1, self._n + 1))
        prefix[1:, 1:] = self.distribution().pair_table(s, w).cumsum(axis=0).cumsum(axis=1)
        lo, hi = interval_bounds_index(self._n)
        return (prefix[np.ix_(hi + 1, hi + 1)] - prefix[np.ix_(lo, hi + 1)]
                - prefix[np.ix_(hi + 1, lo)] + prefix[np.ix_(lo, lo)])

    def run(self):
        result = Check.run(self)
        checked = 0
        violations = 0
        masses = {}
        for s, t, w in itertools.permutations(range(1, self._n + 1), 3):
            if min(s, t) < w < max(s, t):
                continue
            for key in ((s, w), (t, w)):
                if key not in masses:
                    masses[key] = self._interval_masses(*key)
            gaps = np.abs(masses[(s, w)] - masses[(t, w)])
            bound = float(difference_bound(self._q, abs(s - t)))
            checked += gaps.size
            violations += int(np.count_nonzero(gaps > bound + PROBABILITY_TOLERANCE))
        return Check.finish(result, violations, checked, 'pair interval differences')


class PartitionFunctionCheck(MallowsCheck):
    """The q-factorial product equals the plain sum of q**l(p) over S_n."""

    name = 'partition_function'
    min_n = 1

    def run(self):
        result = Check.run(self)
        closed = ExactDistribution.partition_function(self._n, self._q)
        brute = self.distribution().partition_sum
        relative = abs(closed - brute) / brute
        result.add_message('Z = %.17g, relative gap %.3g' % (closed, relative))
        return Check.finish(result, int(relative >= 1e-12), 1, 'partition function identities')


class SamplerExactnessCheck(MallowsCheck):
    """
    Pushing the product law of independent truncated geometric code entries
    through the decoder reproduces q**l(p) / Z atom by atom.

    Arguments:
    decoder -- maps an array of code rows to permutation rows; the sampler's
               own decoder by default.
    """

    name = 'sampler_exactness'
    min_n = 1

    def __init__(self, n, q, distribution=None, decoder=None):
        MallowsCheck.__init__(self, n, q, distribution)
        self._decoder = decoder or LehmerCode.decode_rows

    def run(self):
        result = Check.run(self)
        n = self._n
        codes = np.array(list(itertools.product(*[range(n - i) for i in range(n)])), dtype=np.int64).reshape(-1, n)
        probabilities = np.ones(codes.shape[0])
        for i in range(n):
            probabilities *= truncated_geometric_pmf(self._q, n - 1 - i)[codes[:, i]]
        rows = np.asarray(self._decoder(codes))
        induced = {}
        for row, prob in zip(map(tuple, rows.tolist()), probabilities):
            induced[row] = induced.get(row, 0.0) + prob
        gap = table_difference(induced, self.distribution().table())
        result.add_message('largest atom gap %.3g' % gap)
        violations = int(gap > PROBABILITY_TOLERANCE)
        if rows.shape == codes.shape and sorted(induced) == sorted(self.distribution().table()):
            mismatched = ExactDistribution.brute_force_inversions(rows) != codes.sum(axis=1)
            if mismatched.any():
                result.add_error('%d codes do not sum to the inversion number' % np.count_nonzero(mismatched))
                violations += 1
        return Check.finish(result, violations, codes.shape[0], 'code probabilities')
