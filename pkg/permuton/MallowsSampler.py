# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import logging
import math

import numpy as np

from permuton.LehmerCode import LehmerCode
from permuton.MallowsParams import MallowsParams, ParameterException
from permuton.Permutation import Permutation
from permuton.SeedSpec import SeedSpec

logger = logging.getLogger(__name__)


def truncated_geometric(q, m, uniforms):
    """
    Map uniforms in [0,1) to draws from P(k) proportional to q**k on 0..m,
    by inverting the distribution function. Works elementwise on arrays of m
    and uniforms.
    """
    m = np.asarray(m, dtype=np.int64)
    uniforms = np.asarray(uniforms, dtype=float)
    if q == 1.0:
        k = np.floor(uniforms * (m + 1))
    elif q > 1.0:
        # P(k) ~ q**k is the mirror image of P(k) ~ (1/q)**k
        return m - truncated_geometric(1.0 / q, m, uniforms)
    else:
        log_q = math.log(q)
        k = np.floor(np.log1p(uniforms * np.expm1((m + 1) * log_q)) / log_q)
    return np.clip(k.astype(np.int64), 0, m)


def truncated_geometric_pmf(q, m):
    """The probabilities P(0), .., P(m) of the truncated geometric law."""
    k = np.arange(m + 1, dtype=float)
    if q == 1.0:
        return np.full(m + 1, 1.0 / (m + 1))
    log_weights = k * math.log(q)
    weights = np.exp(log_weights - log_weights.max())
    return weights / weights.sum()


class MallowsSampler(object):
    """
    Exact sampler for the Mallows measure P(p) proportional to q**l(p).

    Under the Mallows measure the entries of the Lehmer code are independent
    and entry i is truncated geometric on 0..n-i with ratio q. A draw takes
    one uniform per entry and decodes the code in O(n log n).
    """

    # upper bound on code entries decoded in one batch
    CHUNK_ENTRIES = 1 << 21

    def __init__(self, params):
        if not isinstance(params, MallowsParams):
            raise ParameterException('Expected MallowsParams, got %r' % (params,))
        self._params = params
        self._bounds = params.n - 1 - np.arange(params.n, dtype=np.int64)

    @property
    def params(self):
        return self._params

    @staticmethod
    def sample_truncated_geometric(q, m, rng):
        if int(m) != m or m < 0:
            raise ParameterException('m must be a non-negative integer, got %r' % (m,))
        if not q > 0:
            raise ParameterException('q must be positive, got %r' % (q,))
        return int(truncated_geometric(q, int(m), rng.random()))

    def sample_lehmer_rows(self, count, rng):
        uniforms = rng.random((count, self._params.n))
        return truncated_geometric(self._params.q, self._bounds[None, :], uniforms)

    def sample_lehmer(self, rng):
        return LehmerCode(self.sample_lehmer_rows(1, rng)[0])

    def sample_with(self, rng):
        return self.sample_lehmer(rng).decode()

    def sample(self, seed, stream=0):
        """The permutation drawn from stream ``stream`` of ``seed``."""
        if not isinstance(seed, SeedSpec):
            seed = SeedSpec(seed)
        return self.sample_with(seed.generator(stream))

    def sample_rows(self, count, rng, decoder=None):
        """
        Yield ``count`` independent samples as (rows, n) arrays of 1-based
        permutations, decoded in chunks.

        Arguments:
        decoder -- maps an array of code rows to permutation rows; the default
                   is the exact Lehmer decode.
        """
        if decoder is None:
            decoder = LehmerCode.decode_rows
        width = 1 << max(0, (self._params.n - 1).bit_length())
        chunk = max(1, self.CHUNK_ENTRIES // width)
        remaining = count
        while remaining > 0:
            size = min(chunk, remaining)
            yield decoder(self.sample_lehmer_rows(size, rng))
            remaining -= size
        logger.debug('Drew %d samples with %r', count, self._params)

    def sample_many(self, count, rng):
        return [Permutation(row, validate=False) for rows in self.sample_rows(count, rng) for row in rows]
