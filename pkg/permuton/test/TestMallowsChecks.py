# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import unittest

from permuton import ExactDistribution, LehmerCode
from permuton.MallowsChecks import (IntervalDifferenceCheck, MarginalRatioCheck, PairIntervalDifferenceCheck,
                                    PairRatioCheck, PartitionFunctionCheck, PositionRatioCheck, RestrictionCheck,
                                    ReversalInverseCheck, SamplerExactnessCheck, difference_bound, ratio_bound)

INEQUALITY_Q_LIST = (0.3, 0.8, 1.25)
SAMPLER_Q_LIST = (0.3, 0.7, 1.0, 1.3)


def reversed_decoder(codes):
    return LehmerCode.decode_rows(codes)[:, ::-1]


class TestMallowsChecks(unittest.TestCase):

    def assertGood(self, result):
        self.assertTrue(result.good, '%s n=%s q=%s: %s' % (result.name, result.n, result.q, result))

    def test_bounds(self):
        self.assertAlmostEqual(4.0, float(ratio_bound(0.5, 2)))
        self.assertAlmostEqual(4.0, float(ratio_bound(2.0, 2)))
        self.assertAlmostEqual(3.0, float(difference_bound(0.5, 2)))
        self.assertEqual(0.0, float(difference_bound(1.0, 3)))

    def test_sampler_is_exact(self):
        for q in SAMPLER_Q_LIST:
            for n in range(1, 7):
                self.assertGood(SamplerExactnessCheck(n, q).run())

    def test_corrupted_decoder_is_caught(self):
        for q in (0.7, 1.0):
            result = SamplerExactnessCheck(4, q, decoder=reversed_decoder).run()
            self.assertFalse(result.good)

    def test_partition_function_up_to_eight(self):
        for q in (0.3, 0.7, 1.3):
            for n in range(1, 9):
                self.assertGood(PartitionFunctionCheck(n, q).run())

    def test_reversal_inverse_and_restriction(self):
        for q in (0.3, 0.8, 1.0, 1.25):
            distribution = ExactDistribution.enumerate_measure(6, q)
            self.assertGood(ReversalInverseCheck(6, q, distribution).run())
            self.assertGood(RestrictionCheck(6, q, distribution).run())

    def test_ratio_inequalities(self):
        for q in INEQUALITY_Q_LIST:
            distribution = ExactDistribution.enumerate_measure(6, q)
            for check_class in (MarginalRatioCheck, PositionRatioCheck, PairRatioCheck):
                self.assertGood(check_class(6, q, distribution).run())

    def test_difference_inequalities(self):
        for q in INEQUALITY_Q_LIST:
            distribution = ExactDistribution.enumerate_measure(6, q)
            for check_class in (IntervalDifferenceCheck, PairIntervalDifferenceCheck):
                self.assertGood(check_class(6, q, distribution).run())

    def test_small_sizes(self):
        for check_class in (ReversalInverseCheck, RestrictionCheck, MarginalRatioCheck, IntervalDifferenceCheck):
            self.assertGood(check_class(2, 0.5).run())
        for check_class in (PairRatioCheck, PairIntervalDifferenceCheck):
            self.assertGood(check_class(3, 2.0).run())

    def test_pair_ratio_reports_interior_positions(self):
        result = PairRatioCheck(4, 0.5).run()
        self.assertTrue(any(message.startswith('interior positions') for message in result.messages))


if __name__ == '__main__':
    unittest.main()
