# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

"""
Array kernels shared by the permutation, sampler and oracle classes.

Both kernels work on a batch of rows at once. Every row is padded to a power
of two and the rows are merged bottom-up, one numpy pass per level, so the
cost is O(n log n) per row without any Python-level loop over the items.
"""

import math

import numpy as np


class PermutonException(Exception):
    """Base class of every error raised by the permuton package."""
    pass


def _padded_width(n):
    return 1 << max(0, (n - 1).bit_length())


def _row_base(rows, w):
    return (np.arange(rows, dtype=np.int64) * w)[:, None]


def right_smaller_counts(values):
    """
    For every row of ``values`` return c[i] = #{j > i : v[j] < v[i]}.

    Arguments:
    values -- a 2-D integer array; each row holds distinct values in [0, n).
    """
    values = np.asarray(values, dtype=np.int64)
    rows_in, n = values.shape
    width = _padded_width(n)
    # Padding values are larger than every real value and increasing, so they
    # never count as smaller than a real item and never count among themselves.
    keys = np.empty((rows_in, width), dtype=np.int64)
    keys[:, :n] = values
    keys[:, n:] = np.arange(n, width, dtype=np.int64)

    total = rows_in * width
    counts = np.zeros(total, dtype=np.int64)
    sorted_values = keys.reshape(-1).copy()
    sorted_items = np.arange(total, dtype=np.int64)

    w = 1
    while w < width:
        rows = total // (2 * w)
        sv = sorted_values.reshape(rows, 2, w)
        si = sorted_items.reshape(rows, 2, w)
        offset = _row_base(rows, width)
        base = _row_base(rows, w)
        left = sv[:, 0, :] + offset
        right = sv[:, 1, :] + offset

        left_less = np.searchsorted(right.ravel(), left.ravel(), side='left').reshape(rows, w) - base
        right_less = np.searchsorted(left.ravel(), right.ravel(), side='left').reshape(rows, w) - base
        counts[si[:, 0, :].ravel()] += left_less.ravel()

        ranks = np.arange(w, dtype=np.int64)[None, :]
        merged_values = np.empty((rows, 2 * w), dtype=np.int64)
        merged_items = np.empty((rows, 2 * w), dtype=np.int64)
        np.put_along_axis(merged_values, ranks + left_less, sv[:, 0, :], axis=1)
        np.put_along_axis(merged_values, ranks + right_less, sv[:, 1, :], axis=1)
        np.put_along_axis(merged_items, ranks + left_less, si[:, 0, :], axis=1)
        np.put_along_axis(merged_items, ranks + right_less, si[:, 1, :], axis=1)
        sorted_values = merged_values.reshape(-1)
        sorted_items = merged_items.reshape(-1)
        w *= 2

    return counts.reshape(rows_in, width)[:, :n]


def count_inversions(values):
    """
    The number of pairs i < j with v[i] > v[j] in a 1-D array of distinct
    integers in [0, n).
    """
    values = np.asarray(values, dtype=np.int64)
    if values.size < 2:
        return 0
    return int(right_smaller_counts(values[None, :]).sum())


def decode_right_smaller_counts(codes):
    """
    Invert right_smaller_counts: for every row of ``codes`` return the
    permutation of [0, n) whose right-smaller counts are the row.

    Decoding is a list insertion run backwards: item n-1 is inserted first,
    item i is inserted at index codes[i] of the list of later items, and the
    final index of item i is its value. A block of items only ever shifts the
    items inserted before it, so two decoded neighbouring blocks are merged by
    placing the right block into the free slots left by the left block.
    """
    codes = np.asarray(codes, dtype=np.int64)
    rows_in, n = codes.shape
    width = _padded_width(n)
    # Padding items carry code 0 and are inserted first; they stay behind
    # every real item and end up at indices n..width-1.
    padded = np.zeros((rows_in, width), dtype=np.int64)
    padded[:, :n] = codes

    total = rows_in * width
    sorted_positions = padded.reshape(-1).copy()
    sorted_items = np.arange(total, dtype=np.int64)

    w = 1
    while w < width:
        rows = total // (2 * w)
        sp = sorted_positions.reshape(rows, 2, w)
        si = sorted_items.reshape(rows, 2, w)
        offset = _row_base(rows, width + 1)
        base = _row_base(rows, w)
        ranks = np.arange(w, dtype=np.int64)[None, :]

        left = sp[:, 0, :]
        # free slots before left[t] is left[t] - t; the r-th free slot is
        # r + #{t : left[t] - t <= r}
        free_before = left - ranks + offset
        skipped = np.searchsorted(free_before.ravel(), (sp[:, 1, :] + offset).ravel(),
                                  side='right').reshape(rows, w) - base
        right = sp[:, 1, :] + skipped
        left_less = np.searchsorted((right + offset).ravel(), (left + offset).ravel(),
                                    side='left').reshape(rows, w) - base

        merged_positions = np.empty((rows, 2 * w), dtype=np.int64)
        merged_items = np.empty((rows, 2 * w), dtype=np.int64)
        np.put_along_axis(merged_positions, ranks + left_less, left, axis=1)
        np.put_along_axis(merged_positions, ranks + skipped, right, axis=1)
        np.put_along_axis(merged_items, ranks + left_less, si[:, 0, :], axis=1)
        np.put_along_axis(merged_items, ranks + skipped, si[:, 1, :], axis=1)
        sorted_positions = merged_positions.reshape(-1)
        sorted_items = merged_items.reshape(-1)
        w *= 2

    result = np.empty(total, dtype=np.int64)
    result[sorted_items] = sorted_positions
    return result.reshape(rows_in, width)[:, :n]


def value_bounds(y1, y2, n):
    """
    The integer values v in [1, n] with y1 <= v/n <= y2, as a (lo, hi) pair.
    An empty selection has lo > hi.
    """
    lo = max(1, int(math.ceil(y1 * n - 1e-9)))
    hi = min(n, int(math.floor(y2 * n + 1e-9)))
    return lo, hi


def format_real(value):
    return '%.17g' % value
