# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import json

import numpy as np

from permuton.helpers import PermutonException, count_inversions


class PermutationException(PermutonException):
    pass


def _integer_values(values):
    """The values as a list or array of integers; floats and booleans are rejected."""
    if isinstance(values, np.ndarray):
        if values.dtype.kind not in 'iu':
            raise PermutationException('Permutation values must be integers, got dtype %s' % values.dtype)
        return values
    try:
        values = list(values)
    except TypeError:
        raise PermutationException('Expected a sequence of integers, got %r' % (values,))
    for value in values:
        if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
            raise PermutationException('Permutation values must be integers, got %r' % (value,))
    return values


class Permutation(object):
    """
    An immutable bijection of {1..n}. Positions and values are 1-indexed in
    every public method; the map is stored as a read-only numpy array.
    """

    def __init__(self, values, validate=True):
        if validate:
            values = _integer_values(values)
        array = np.array(values, dtype=np.int64).reshape(-1)
        n = array.size
        if n == 0:
            raise PermutationException('A permutation needs at least one element')
        if validate:
            if array.min() < 1 or array.max() > n or np.bincount(array - 1, minlength=n).max() != 1:
                raise PermutationException('%s is not a bijection of {1..%d}' % (list(array), n))
        array.flags.writeable = False
        self._map = array
        self._inversions = None

    @staticmethod
    def identity(n):
        return Permutation(np.arange(1, n + 1), validate=False)

    @staticmethod
    def parse(text):
        """Read a permutation from '4,1,7,3' or from a JSON list."""
        text = text.strip()
        try:
            if text.startswith('['):
                values = json.loads(text)
            else:
                values = [int(token) for token in text.split(',')]
        except ValueError:
            raise PermutationException('Cannot read a permutation from "%s"' % text)
        return Permutation(values)

    @property
    def n(self):
        return self._map.size

    @property
    def map(self):
        """The values (p(1), .., p(n)) as a read-only array."""
        return self._map

    def as_tuple(self):
        return tuple(int(v) for v in self._map)

    def __call__(self, i):
        self._check_position(i)
        return int(self._map[i - 1])

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.as_tuple())

    def __eq__(self, other):
        return isinstance(other, Permutation) and np.array_equal(self._map, other._map)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return 'Permutation(%s)' % self.to_csv()

    def __str__(self):
        return self.to_csv()

    def to_csv(self):
        return ','.join(str(int(v)) for v in self._map)

    def to_json(self):
        return json.dumps(list(self.as_tuple()))

    def _check_position(self, i, name='index'):
        if not 1 <= i <= self.n:
            raise PermutationException('%s %s is outside 1..%d' % (name, i, self.n))

    def inversion_number(self):
        """The number of pairs i < j with p(i) > p(j)."""
        if self._inversions is None:
            self._inversions = count_inversions(self._map - 1)
        return self._inversions

    def points(self):
        """The point set {(i/n, p(i)/n)}."""
        from permuton.PointSet import PointSet
        n = float(self.n)
        return PointSet(np.arange(1, self.n + 1) / n, self._map / n)

    def compose(self, other):
        """The permutation i -> self(other(i))."""
        if other.n != self.n:
            raise PermutationException('Cannot compose permutations of sizes %d and %d' % (self.n, other.n))
        return Permutation(self._map[other.map - 1], validate=False)

    def inverse(self):
        inverse = np.empty(self.n, dtype=np.int64)
        inverse[self._map - 1] = np.arange(1, self.n + 1)
        return Permutation(inverse, validate=False)

    def reverse(self):
        """The permutation i -> p(n + 1 - i)."""
        return Permutation(self._map[::-1], validate=False)

    def delete_index(self, i):
        """
        Remove position i and close the gap in the values, giving a
        permutation of {1..n-1}.
        """
        if self.n < 2:
            raise PermutationException('Cannot delete an index from a permutation of size 1')
        self._check_position(i)
        removed = self._map[i - 1]
        rest = np.delete(self._map, i - 1)
        return Permutation(rest - (rest > removed), validate=False)

    def q_neighbors(self, i):
        """
        Every permutation that agrees with this one after deleting index i,
        ordered by the value it takes at i.
        """
        base = self.delete_index(i).map
        neighbors = []
        for k in range(1, self.n + 1):
            values = np.insert(base + (base >= k), i - 1, k)
            neighbors.append(Permutation(values, validate=False))
        return neighbors

    def inversion_delta(self, i, k):
        """
        l(t) - l(p) for the neighbor t in q_neighbors(i) with t(i) = k,
        computed from the values of p alone.
        """
        self._check_position(i)
        self._check_position(k, 'value')
        j = int(self._map[i - 1])
        if k == j:
            return 0
        before = self._map[:i - 1]
        after = self._map[i:]
        if j < k:
            low, high, sign = j + 1, k, 1
        else:
            low, high, sign = k, j - 1, -1
        later = np.count_nonzero((after >= low) & (after <= high))
        earlier = np.count_nonzero((before >= low) & (before <= high))
        return sign * int(later - earlier)

    def restrict(self, j, k):
        """The pattern of p on positions j..k, as a permutation of {1..k-j+1}."""
        self._check_position(j)
        self._check_position(k)
        if j >= k:
            raise PermutationException('Cannot restrict to positions %d..%d' % (j, k))
        segment = self._map[j - 1:k]
        ranks = np.empty(segment.size, dtype=np.int64)
        ranks[np.argsort(segment)] = np.arange(1, segment.size + 1)
        return Permutation(ranks, validate=False)

    def transpose_values(self, j):
        """Swap the values j and j + 1."""
        if not 1 <= j < self.n:
            raise PermutationException('value %s has no successor in 1..%d' % (j, self.n))
        values = self._map.copy()
        low = values == j
        high = values == j + 1
        values[low] = j + 1
        values[high] = j
        return Permutation(values, validate=False)
