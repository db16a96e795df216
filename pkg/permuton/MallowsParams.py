# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import math

from permuton.helpers import PermutonException


class ParameterException(PermutonException):
    pass


class MallowsParams(object):
    """Size n >= 1 and inversion weight q > 0 of a Mallows measure."""

    def __init__(self, n, q):
        if int(n) != n or n < 1:
            raise ParameterException('n must be a positive integer, got %r' % (n,))
        if not q > 0 or math.isinf(q):
            raise ParameterException('q must be a positive real, got %r' % (q,))
        self._n = int(n)
        self._q = float(q)

    @property
    def n(self):
        return self._n

    @property
    def q(self):
        return self._q

    def __repr__(self):
        return 'MallowsParams(n=%d, q=%r)' % (self._n, self._q)


def q_from_beta(n, beta):
    """q_n = 1 - beta/n."""
    q = 1.0 - float(beta) / n
    if q <= 0:
        raise ParameterException('beta = %r gives q <= 0 at n = %d' % (beta, n))
    return q


class BetaSchedule(object):
    """
    The schedule q_n = 1 - beta/n that puts Mallows measures on the scale of
    the limit density with parameter beta.
    """

    def __init__(self, beta):
        self._beta = float(beta)

    @property
    def beta(self):
        return self._beta

    def q(self, n):
        return q_from_beta(n, self._beta)

    def params(self, n):
        return MallowsParams(n, self.q(n))

    def to_dict(self, n_list):
        return dict((str(n), self.q(n)) for n in n_list)
