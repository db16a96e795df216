# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import math

from permuton.MallowsParams import ParameterException


def _finite(name, value):
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        raise ParameterException('%s must be a finite real, got %r' % (name, value))
    return value


class DensityParams(object):
    def __init__(self, beta):
        self._beta = _finite('beta', beta)

    @property
    def beta(self):
        return self._beta

    def __repr__(self):
        return 'DensityParams(beta=%r)' % self._beta


class RhoParams(object):
    """Parameters of the density of the composition of two independent Mallows permutations."""

    def __init__(self, beta, gamma):
        self._beta = _finite('beta', beta)
        self._gamma = _finite('gamma', gamma)

    @property
    def beta(self):
        return self._beta

    @property
    def gamma(self):
        return self._gamma

    def __repr__(self):
        return 'RhoParams(beta=%r, gamma=%r)' % (self._beta, self._gamma)
