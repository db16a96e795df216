# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import itertools

import numpy as np

from permuton.helpers import PermutonException, decode_right_smaller_counts, right_smaller_counts
from permuton.Permutation import Permutation


class LehmerCodeException(PermutonException):
    pass


class LehmerCode(object):
    """
    The code c of a permutation p, where c(i) = #{j > i : p(j) < p(i)} and
    0 <= c(i) <= n - i. The entries sum to the inversion number of p.
    """

    def __init__(self, entries):
        entries = np.array(entries, dtype=np.int64).reshape(-1)
        LehmerCode.validate_rows(entries[None, :])
        entries.flags.writeable = False
        self._entries = entries

    @staticmethod
    def validate_rows(rows):
        n = rows.shape[1]
        if n == 0:
            raise LehmerCodeException('A code needs at least one entry')
        limit = n - 1 - np.arange(n)
        bad = (rows < 0) | (rows > limit)
        if bad.any():
            row, column = np.argwhere(bad)[0]
            raise LehmerCodeException('Entry %d of %s must lie in 0..%d'
                                      % (column + 1, list(rows[row]), limit[column]))

    @staticmethod
    def from_permutation(permutation):
        return LehmerCode(right_smaller_counts(permutation.map[None, :] - 1)[0])

    @staticmethod
    def decode_rows(rows):
        """Decode a (count, n) array of codes into a (count, n) array of 1-based permutations."""
        rows = np.asarray(rows, dtype=np.int64)
        LehmerCode.validate_rows(rows)
        return decode_right_smaller_counts(rows) + 1

    @staticmethod
    def encode_rows(rows):
        """The codes of a (count, n) array of 1-based permutations."""
        return right_smaller_counts(np.asarray(rows, dtype=np.int64) - 1)

    @staticmethod
    def all_codes(n):
        """Every valid code of length n, in lexicographic order."""
        for entries in itertools.product(*[range(n - i) for i in range(n)]):
            yield LehmerCode(entries)

    @property
    def n(self):
        return self._entries.size

    @property
    def entries(self):
        return self._entries

    def total(self):
        return int(self._entries.sum())

    def decode(self):
        return Permutation(decode_right_smaller_counts(self._entries[None, :])[0] + 1, validate=False)

    def __eq__(self, other):
        return isinstance(other, LehmerCode) and np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash(tuple(self._entries))

    def __repr__(self):
        return 'LehmerCode(%s)' % ','.join(str(int(c)) for c in self._entries)
