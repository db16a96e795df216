# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import numpy as np

from permuton.helpers import PermutonException


def ks_statistic(samples, cdf):
    """
    sup |F_hat - F| over the sample points, taking both the left and the
    right limit of the empirical distribution function F_hat.

    Arguments:
    samples -- reals in [0, 1].
    cdf -- a nondecreasing function accepting an array of points.
    """
    samples = np.sort(np.asarray(samples, dtype=float).reshape(-1))
    k = samples.size
    if k == 0:
        raise PermutonException('Cannot compute a KS statistic of no samples')
    values = np.broadcast_to(np.asarray(cdf(samples), dtype=float), samples.shape)
    steps = np.arange(1, k + 1) / float(k)
    above = np.max(steps - values)
    below = np.max(values - (steps - 1.0 / k))
    return float(min(1.0, max(above, below, 0.0)))
