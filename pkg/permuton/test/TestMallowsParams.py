# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import unittest

from permuton import BetaSchedule, MallowsParams, ParameterException, SeedSpec, q_from_beta


class TestMallowsParams(unittest.TestCase):

    def test_rejects_invalid_sizes_and_weights(self):
        self.assertRaises(ParameterException, MallowsParams, 0, 0.5)
        self.assertRaises(ParameterException, MallowsParams, 2.5, 0.5)
        self.assertRaises(ParameterException, MallowsParams, 3, 0.0)
        self.assertRaises(ParameterException, MallowsParams, 3, -1.0)
        self.assertRaises(ParameterException, MallowsParams, 3, float('inf'))
        self.assertRaises(ParameterException, MallowsParams, 3, float('nan'))

    def test_q_from_beta(self):
        self.assertAlmostEqual(0.8, q_from_beta(10, 2.0))
        self.assertAlmostEqual(1.1, q_from_beta(10, -1.0))
        self.assertEqual(1.0, q_from_beta(7, 0.0))

    def test_q_from_beta_rejects_nonpositive_q(self):
        self.assertRaises(ParameterException, q_from_beta, 2, 2.0)
        self.assertRaises(ParameterException, q_from_beta, 3, 5.0)

    def test_schedule_records_every_q(self):
        schedule = BetaSchedule(2.0)
        self.assertEqual({'10': 0.8, '20': 0.9}, schedule.to_dict([10, 20]))
        self.assertEqual(20, schedule.params(20).n)


class TestSeedSpec(unittest.TestCase):

    def test_same_stream_repeats(self):
        seed = SeedSpec(42)
        self.assertEqual(list(seed.generator(3).random(5)), list(SeedSpec(42).generator(3).random(5)))

    def test_streams_and_seeds_differ(self):
        seed = SeedSpec(42)
        self.assertNotEqual(list(seed.generator(0).random(5)), list(seed.generator(1).random(5)))
        self.assertNotEqual(list(seed.generator(0).random(5)), list(SeedSpec(43).generator(0).random(5)))
        self.assertNotEqual(list(seed.generator((0, 1)).random(5)), list(seed.generator((1, 0)).random(5)))

    def test_to_dict(self):
        self.assertEqual({'seed': 7, 'algorithm': 'PCG64'}, SeedSpec(7).to_dict())

    def test_rejects_negative_or_fractional_seeds(self):
        self.assertRaises(ParameterException, SeedSpec, -1)
        self.assertRaises(ParameterException, SeedSpec, 1.5)


if __name__ == '__main__':
    unittest.main()
