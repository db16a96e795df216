# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

"""
Exhaustive checks of the combinatorics of S_n that do not involve q.
"""

import numpy as np

from permuton.Check import Check
from permuton.ExactDistribution import ExactDistribution
from permuton.LehmerCode import LehmerCode
from permuton.Permutation import Permutation

# largest n at which every permutation is also counted as a point set
POINT_SET_MAX_N = 6


class InversionCountCheck(Check):
    """The merge counter, the point-set count and the pair scan agree on S_n."""

    name = 'inversion_count'
    min_n = 1

    def run(self):
        result = Check.run(self)
        rows = Check.all_permutation_rows(self._n)
        expected = ExactDistribution.brute_force_inversions(rows)
        merged = LehmerCode.encode_rows(rows).sum(axis=1)
        violations = int(np.count_nonzero(merged != expected))
        if self._n <= POINT_SET_MAX_N:
            for row, count in zip(rows, expected):
                p = Permutation(row, validate=False)
                if p.inversion_number() != count or p.points().point_inversions() != count:
                    violations += 1
        return Check.finish(result, violations, rows.shape[0], 'inversion counts')


class InversionDeltaCheck(Check):
    """The counting formula for l(t) - l(p) over every neighbor t of every p."""

    name = 'inversion_delta'
    min_n = 2

    def run(self):
        result = Check.run(self)
        checked = 0
        violations = 0
        for row in Check.all_permutation_rows(self._n):
            p = Permutation(row, validate=False)
            for i in range(1, self._n + 1):
                for t in p.q_neighbors(i):
                    checked += 1
                    if p.inversion_delta(i, t(i)) != t.inversion_number() - p.inversion_number():
                        violations += 1
        return Check.finish(result, violations, checked, 'inversion deltas')


class NeighborhoodPartitionCheck(Check):
    """
    For every i the neighborhoods q_neighbors(p, i) are the classes of
    p -> delete_index(p, i), so any two are equal or disjoint.
    """

    name = 'neighborhood_partition'
    min_n = 2

    def run(self):
        result = Check.run(self)
        perms = [Permutation(row, validate=False) for row in Check.all_permutation_rows(self._n)]
        checked = 0
        violations = 0
        for i in range(1, self._n + 1):
            classes = {}
            for p in perms:
                classes.setdefault(p.delete_index(i), set()).add(p)
            for p in perms:
                checked += 1
                neighbors = p.q_neighbors(i)
                members = set(neighbors)
                sorted_by_value = [t(i) for t in neighbors] == list(range(1, self._n + 1))
                if members != classes[p.delete_index(i)] or len(neighbors) != self._n or not sorted_by_value:
                    violations += 1
        return Check.finish(result, violations, checked, 'neighborhoods')


class TranspositionCheck(Check):
    """Swapping the values j and j+1 changes the inversion number by exactly one."""

    name = 'value_transposition'
    min_n = 2

    def run(self):
        result = Check.run(self)
        checked = 0
        violations = 0
        for row in Check.all_permutation_rows(self._n):
            p = Permutation(row, validate=False)
            for j in range(1, self._n):
                checked += 1
                if abs(p.transpose_values(j).inversion_number() - p.inversion_number()) != 1:
                    violations += 1
        return Check.finish(result, violations, checked, 'transpositions')
