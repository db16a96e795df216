# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import numpy as np

from permuton.MallowsParams import ParameterException


class SeedSpec(object):
    """
    A master seed from which independent, reproducible random streams are
    derived. Stream k is the PCG64 generator of the seed sequence spawned from
    the master seed with key k, so results do not depend on how the streams
    are later scheduled on threads.
    """

    ALGORITHM = 'PCG64'

    def __init__(self, master_seed):
        if int(master_seed) != master_seed or master_seed < 0:
            raise ParameterException('seed must be a non-negative integer, got %r' % (master_seed,))
        self._master_seed = int(master_seed)

    @property
    def master_seed(self):
        return self._master_seed

    def generator(self, stream=0):
        if isinstance(stream, tuple):
            key = tuple(int(k) for k in stream)
        else:
            key = (int(stream),)
        sequence = np.random.SeedSequence(self._master_seed, spawn_key=key)
        return np.random.Generator(np.random.PCG64(sequence))

    def to_dict(self):
        return {'seed': self._master_seed, 'algorithm': self.ALGORITHM}
