# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import itertools

import numpy as np

from permuton.CheckResult import CheckResult

# slack on exact comparisons of probabilities computed in double precision
PROBABILITY_TOLERANCE = 1e-12


class Check(object):
    """
    One verifiable identity. Subclasses extend run(), which hands them a
    fresh CheckResult for the size and parameter the check was built with.
    """

    name = 'check'
    # smallest size at which the check says anything
    min_n = 1

    def __init__(self, n=None, q=None):
        self._n = n
        self._q = q

    @property
    def n(self):
        return self._n

    @property
    def q(self):
        return self._q

    def run(self):
        return CheckResult(self.name, self._n, self._q)

    @staticmethod
    def all_permutation_rows(n):
        return np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64).reshape(-1, n)

    @staticmethod
    def pattern_rows(rows):
        """The permutations induced by each row of an array of distinct values."""
        rows = np.asarray(rows)
        return np.argsort(np.argsort(rows, axis=1), axis=1) + 1

    @staticmethod
    def finish(result, violations, checked, what):
        if violations:
            result.add_error('%d of %d %s violated' % (violations, checked, what))
            result.mark_as_bad()
        else:
            result.add_message('%d %s hold' % (checked, what))
            result.mark_as_good()
        return result
