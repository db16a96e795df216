# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import csv
import logging

import numpy as np

from permuton.DiscrepancyReport import DiscrepancyReport
from permuton.helpers import PermutonException
from permuton.Permutation import PermutationException
from permuton.Rect import Rect

logger = logging.getLogger(__name__)

ANCHORED = 'anchored'
ALL_CELLS = 'all_cells'
MODES = (ANCHORED, ALL_CELLS)


class GridCounts(object):
    """
    Counts of the points (x/n, y/n) in the half-open cells
    ((a-1)/m, a/m] x ((b-1)/m, b/m] of an m x m grid.
    """

    def __init__(self, x_values, y_values, n, m):
        if int(m) != m or m < 1:
            raise PermutonException('Grid resolution must be a positive integer, got %r' % (m,))
        m = int(m)
        x_values = np.asarray(x_values, dtype=np.int64)
        y_values = np.asarray(y_values, dtype=np.int64)
        # cell of the point v/n is ceil(v*m/n), computed in integers
        a = (x_values * m + n - 1) // n - 1
        b = (y_values * m + n - 1) // n - 1
        self._counts = np.bincount(a * m + b, minlength=m * m).reshape(m, m)
        self._n = n
        self._m = m

    @staticmethod
    def from_permutation(p, m):
        return GridCounts(np.arange(1, p.n + 1), p.map, p.n, m)

    @staticmethod
    def from_pair(p, t, m):
        if p.n != t.n:
            raise PermutationException('Cannot pair permutations of sizes %d and %d' % (p.n, t.n))
        return GridCounts(p.map, t.map, p.n, m)

    @staticmethod
    def reference_cells(mass_function, m):
        """The masses mass_function(cell) of the m*m grid cells, as an m x m array."""
        cells = np.empty((m, m))
        for a in range(m):
            for b in range(m):
                cells[a, b] = mass_function(Rect.grid_cell(a, a + 1, b, b + 1, m))
        return cells

    @property
    def counts(self):
        return self._counts

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def total(self):
        return int(self._counts.sum())

    def prefix_masses(self):
        """P[a, b] = empirical mass of (0, a/m] x (0, b/m], an (m+1) x (m+1) array."""
        prefix = np.zeros((self._m + 1, self._m + 1))
        prefix[1:, 1:] = self._counts.cumsum(axis=0).cumsum(axis=1) / float(self._n)
        return prefix

    def discrepancy(self, reference, mode=ALL_CELLS):
        """
        The largest |empirical - reference| mass over grid-aligned rectangles.

        Arguments:
        reference -- an m x m array of reference cell masses, or a function
                     from a Rect to its reference mass.
        mode -- 'anchored' for the rectangles (0, a/m] x (0, b/m], 'all_cells'
                for every rectangle that is a union of grid cells.
        """
        if mode not in MODES:
            raise PermutonException('Unknown discrepancy mode "%s"' % mode)
        if callable(reference):
            reference = GridCounts.reference_cells(reference, self._m)
        reference = np.asarray(reference, dtype=float)
        if reference.shape != (self._m, self._m):
            raise PermutonException('Expected %dx%d reference cells, got shape %r'
                                    % (self._m, self._m, reference.shape))
        m = self._m
        prefix = self.prefix_masses()
        prefix[1:, 1:] -= reference.cumsum(axis=0).cumsum(axis=1)

        if mode == ANCHORED:
            deviations = np.abs(prefix[1:, 1:])
            a, b = np.unravel_index(np.argmax(deviations), deviations.shape)
            return DiscrepancyReport(deviations[a, b], Rect.grid_cell(0, a + 1, 0, b + 1, m),
                                     mode, m, prefix[1:, 1:].copy())

        best = -1.0
        best_rect = None
        upper = np.triu(np.ones((m + 1, m + 1), dtype=bool), k=1)
        for a1 in range(m):
            rows = prefix[a1 + 1:, :]
            # slab[a2, b1, b2] = mass of (a1/m, a2/m] x (b1/m, b2/m]
            slab = (rows[:, None, :] - rows[:, :, None]) - (prefix[a1][None, :] - prefix[a1][:, None])[None, :, :]
            slab = np.where(upper[None, :, :], np.abs(slab), -1.0)
            index = np.argmax(slab)
            if slab.flat[index] > best:
                a2, b1, b2 = np.unravel_index(index, slab.shape)
                best = slab.flat[index]
                best_rect = Rect.grid_cell(a1, a1 + 1 + a2, b1, b2, m)
        logger.debug('All-cells discrepancy %.6g at %r', best, best_rect)
        return DiscrepancyReport(best, best_rect, mode, m)

    def to_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(['a', 'b', 'count'])
        for a in range(self._m):
            for b in range(self._m):
                writer.writerow([a + 1, b + 1, int(self._counts[a, b])])
