# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import itertools
import json
import unittest

import numpy as np

from permuton import Permutation, PermutationException
from permuton.ExactDistribution import ExactDistribution
from permuton.helpers import count_inversions, right_smaller_counts

from permuton.test.helpers import EXAMPLE, example_permutation


class TestPermutation(unittest.TestCase):

    def setUp(self):
        self.p = example_permutation()

    def tearDown(self):
        pass

    def test_rejects_values_that_are_not_a_bijection(self):
        self.assertRaises(PermutationException, Permutation, [1, 1, 2])
        self.assertRaises(PermutationException, Permutation, [0, 1, 2])
        self.assertRaises(PermutationException, Permutation, [1, 2, 4])
        self.assertRaises(PermutationException, Permutation, [])

    def test_values_are_read_only(self):
        with self.assertRaises(ValueError):
            self.p.map[0] = 2

    def test_call_is_one_based(self):
        self.assertEqual(4, self.p(1))
        self.assertEqual(5, self.p(7))
        self.assertRaises(PermutationException, self.p, 0)
        self.assertRaises(PermutationException, self.p, 8)

    def test_parse_accepts_csv_and_json(self):
        self.assertEqual(self.p, Permutation.parse('4,1,7,3,6,2,5'))
        self.assertEqual(self.p, Permutation.parse(' [4, 1, 7, 3, 6, 2, 5]\n'))
        self.assertRaises(PermutationException, Permutation.parse, '4,x,1')

    def test_parse_rejects_values_that_are_not_integers(self):
        self.assertRaises(PermutationException, Permutation.parse, '[1.7, 2]')
        self.assertRaises(PermutationException, Permutation.parse, '[2.0, 1]')
        self.assertRaises(PermutationException, Permutation.parse, '[true, 2]')
        self.assertRaises(PermutationException, Permutation.parse, '[[1], 2]')
        self.assertRaises(PermutationException, Permutation.parse, '[1, "2"]')
        self.assertRaises(PermutationException, Permutation, np.array([1.0, 2.0]))
        self.assertRaises(PermutationException, Permutation, 5)
        self.assertEqual(Permutation([2, 1]), Permutation(np.array([2, 1], dtype=np.int32)))

    def test_serializations(self):
        self.assertEqual('4,1,7,3,6,2,5', self.p.to_csv())
        self.assertEqual(list(EXAMPLE), json.loads(self.p.to_json()))

    def test_inversion_number_of_identity_is_zero(self):
        self.assertEqual(0, Permutation.identity(5).inversion_number())

    def test_inversion_number_of_worked_example(self):
        self.assertEqual(10, self.p.inversion_number())

    def test_inversion_number_of_reversal_counts_every_pair(self):
        self.assertEqual(6, Permutation([4, 3, 2, 1]).inversion_number())

    def test_inversion_number_agrees_with_pair_scan_on_random_permutations(self):
        rng = np.random.default_rng(7)
        for n in (1, 2, 3, 5, 8, 13, 64, 100, 257):
            p = Permutation(rng.permutation(n) + 1)
            self.assertEqual(ExactDistribution.brute_force_inversion_number(p), p.inversion_number())

    def test_merge_counter_handles_a_batch_of_rows(self):
        rows = np.array(list(itertools.permutations(range(5))))
        counts = right_smaller_counts(rows)
        expected = np.array([[sum(1 for j in range(i + 1, 5) if row[j] < row[i]) for i in range(5)] for row in rows])
        np.testing.assert_array_equal(expected, counts)
        self.assertEqual(0, count_inversions(np.array([0])))

    def test_compose_applies_the_right_factor_first(self):
        t = Permutation([2, 3, 1])
        p = Permutation([3, 1, 2])
        self.assertEqual((1, 2, 3), t.compose(p).as_tuple())
        self.assertEqual((2, 3, 1), Permutation([2, 1, 3]).compose(Permutation([1, 3, 2])).as_tuple())

    def test_compose_rejects_mixed_sizes(self):
        self.assertRaises(PermutationException, self.p.compose, Permutation.identity(3))

    def test_inverse(self):
        inverse = self.p.inverse()
        self.assertEqual(Permutation.identity(7), self.p.compose(inverse))
        self.assertEqual(Permutation.identity(7), inverse.compose(self.p))
        self.assertEqual(self.p.inversion_number(), inverse.inversion_number())

    def test_reverse(self):
        self.assertEqual((5, 2, 6, 3, 7, 1, 4), self.p.reverse().as_tuple())
        self.assertEqual(21 - 10, self.p.reverse().inversion_number())

    def test_delete_index_closes_the_gap(self):
        self.assertEqual((3, 1, 6, 5, 2, 4), self.p.delete_index(4).as_tuple())
        self.assertRaises(PermutationException, Permutation([1]).delete_index, 1)

    def test_q_neighbors_are_sorted_by_the_value_at_i(self):
        neighbors = self.p.q_neighbors(3)
        self.assertEqual(7, len(neighbors))
        self.assertEqual(list(range(1, 8)), [t(3) for t in neighbors])
        self.assertIn(self.p, neighbors)
        for t in neighbors:
            self.assertEqual(self.p.delete_index(3), t.delete_index(3))

    def test_inversion_delta_of_worked_example(self):
        neighbors = self.p.q_neighbors(4)
        t = neighbors[5]
        self.assertEqual(6, t(4))
        self.assertEqual(1, self.p.inversion_delta(4, 6))
        self.assertEqual(t.inversion_number() - self.p.inversion_number(), self.p.inversion_delta(4, 6))
        self.assertEqual(-1, t.inversion_delta(4, 3))

    def test_inversion_delta_of_unchanged_value_is_zero(self):
        self.assertEqual(0, self.p.inversion_delta(4, 3))

    def test_inversion_delta_matches_recount_for_every_neighbor(self):
        for i in range(1, 8):
            for t in self.p.q_neighbors(i):
                self.assertEqual(t.inversion_number() - self.p.inversion_number(), self.p.inversion_delta(i, t(i)))

    def test_restrict_returns_the_pattern(self):
        self.assertEqual((1, 3, 2), self.p.restrict(2, 4).as_tuple())
        self.assertEqual((3, 1, 4, 2), self.p.restrict(1, 4).as_tuple())
        self.assertEqual(self.p, self.p.restrict(1, 7))

    def test_restrict_rejects_empty_and_single_ranges(self):
        self.assertRaises(PermutationException, self.p.restrict, 3, 3)
        self.assertRaises(PermutationException, self.p.restrict, 4, 2)
        self.assertRaises(PermutationException, self.p.restrict, 0, 2)

    def test_transpose_values_changes_inversions_by_one(self):
        self.assertEqual((3, 1, 7, 4, 6, 2, 5), self.p.transpose_values(3).as_tuple())
        for j in range(1, 7):
            self.assertEqual(1, abs(self.p.transpose_values(j).inversion_number() - 10))
        self.assertRaises(PermutationException, self.p.transpose_values, 7)

    def test_equal_permutations_hash_alike(self):
        self.assertEqual(hash(self.p), hash(Permutation(list(EXAMPLE))))
        self.assertEqual(1, len(set([self.p, Permutation(list(EXAMPLE))])))
        self.assertNotEqual(self.p, self.p.reverse())


if __name__ == '__main__':
    unittest.main()
