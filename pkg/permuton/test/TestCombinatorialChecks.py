# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import unittest

import numpy as np

from permuton.Check import Check
from permuton.CombinatorialChecks import (InversionCountCheck, InversionDeltaCheck, NeighborhoodPartitionCheck,
                                          TranspositionCheck)


class TestCombinatorialChecks(unittest.TestCase):

    def test_inversion_counts_agree_up_to_eight(self):
        for n in (1, 2, 6, 8):
            self.assertTrue(InversionCountCheck(n).run().good)

    def test_inversion_delta_over_all_of_s5(self):
        result = InversionDeltaCheck(5).run()
        self.assertTrue(result.good, str(result))
        self.assertEqual(['%d inversion deltas hold' % (120 * 5 * 5)], result.messages)

    def test_neighborhoods_partition_s4(self):
        self.assertTrue(NeighborhoodPartitionCheck(4).run().good)

    def test_transpositions(self):
        self.assertTrue(TranspositionCheck(5).run().good)

    def test_pattern_rows(self):
        np.testing.assert_array_equal([[2, 1, 3], [3, 1, 2]], Check.pattern_rows(np.array([[5, 2, 9], [7, 1, 4]])))

    def test_finish_counts_violations(self):
        result = Check.finish(Check(3).run(), 2, 10, 'things')
        self.assertFalse(result.good)
        self.assertEqual(['2 of 10 things violated'], result.errors)


if __name__ == '__main__':
    unittest.main()
