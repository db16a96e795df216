# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import logging

from permuton.CheckResult import CheckResult
from permuton.CombinatorialChecks import (InversionCountCheck, InversionDeltaCheck, NeighborhoodPartitionCheck,
                                          TranspositionCheck)
from permuton.DensityChecks import (DensityMarginalCheck, LogDensityEquationCheck, LogRatioCheck,
                                    ProductMarginalCheck, ScalingCheck)
from permuton.ExactDistribution import ExactDistribution, OracleException
from permuton.MallowsChecks import (IntervalDifferenceCheck, MarginalRatioCheck, PairIntervalDifferenceCheck,
                                    PairRatioCheck, PartitionFunctionCheck, PositionRatioCheck, ReversalInverseCheck,
                                    RestrictionCheck, SamplerExactnessCheck)

logger = logging.getLogger(__name__)


class Verification(object):
    """
    Runs every exact check for n = 1..max_n and every q in q_list, plus the
    density identities, and collects one CheckResult per check.
    """

    DEFAULT_Q_LIST = (0.3, 0.8, 1.0, 1.25)
    # largest n for the checks that walk S_n element by element
    EXHAUSTIVE_MAX_N = 6
    PARTITION_MAX_N = 8

    COMBINATORIAL_CHECKS = (InversionCountCheck, InversionDeltaCheck, NeighborhoodPartitionCheck, TranspositionCheck)
    MALLOWS_CHECKS = (ReversalInverseCheck, RestrictionCheck, MarginalRatioCheck, PositionRatioCheck, PairRatioCheck,
                      IntervalDifferenceCheck, PairIntervalDifferenceCheck, SamplerExactnessCheck)
    DENSITY_CHECKS = (DensityMarginalCheck, LogDensityEquationCheck, LogRatioCheck, ScalingCheck,
                      ProductMarginalCheck)

    def __init__(self, max_n, q_list=None, include_density=True, decoder=None):
        if max_n < 1 or max_n > ExactDistribution.MAX_N:
            raise OracleException('max_n must lie in 1..%d, got %r' % (ExactDistribution.MAX_N, max_n))
        self._max_n = int(max_n)
        self._q_list = tuple(q_list) if q_list else self.DEFAULT_Q_LIST
        self._include_density = include_density
        self._decoder = decoder

    @property
    def max_n(self):
        return self._max_n

    @property
    def q_list(self):
        return self._q_list

    def _sizes(self, check_class, limit):
        return range(check_class.min_n, min(self._max_n, limit) + 1)

    def _skipped(self, check_class):
        result = CheckResult(check_class.name)
        result.mark_as_skipped('no size in %d..%d' % (check_class.min_n, self._max_n))
        return result

    def checks(self):
        """The checks to run, or a skipped result for a check with no size to run at."""
        for check_class in self.COMBINATORIAL_CHECKS:
            limit = self.PARTITION_MAX_N if check_class is InversionCountCheck else self.EXHAUSTIVE_MAX_N
            sizes = self._sizes(check_class, limit)
            if not sizes:
                yield self._skipped(check_class)
            for n in sizes:
                yield check_class(n)

        for q in self._q_list:
            for n in self._sizes(PartitionFunctionCheck, self.PARTITION_MAX_N):
                yield PartitionFunctionCheck(n, q)

        for check_class in self.MALLOWS_CHECKS:
            sizes = self._sizes(check_class, self.EXHAUSTIVE_MAX_N)
            if not sizes:
                yield self._skipped(check_class)
            for q in self._q_list if sizes else ():
                for n in sizes:
                    if check_class is SamplerExactnessCheck:
                        yield SamplerExactnessCheck(n, q, decoder=self._decoder)
                    else:
                        yield check_class(n, q)

        if self._include_density:
            for check_class in self.DENSITY_CHECKS:
                yield check_class()

    def run(self):
        results = []
        for check in self.checks():
            if isinstance(check, CheckResult):
                results.append(check)
                continue
            result = check.run()
            logger.info('%s n=%s q=%s: %s', result.name, result.n, result.q, result.status)
            results.append(result)
        return results

    @staticmethod
    def all_good(results):
        return all(result.good for result in results)
