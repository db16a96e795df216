# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import unittest

from permuton import LehmerCode, OracleException, Verification
from permuton.CheckResult import FAIL, SKIPPED


def reversed_decoder(codes):
    return LehmerCode.decode_rows(codes)[:, ::-1]


class TestVerification(unittest.TestCase):

    def test_exact_checks_pass_up_to_five(self):
        results = Verification(5, [0.5, 1.0, 2.0], include_density=False).run()
        failed = [result.to_row() for result in results if not result.good]
        self.assertEqual([], failed)
        self.assertTrue(Verification.all_good(results))

    def test_size_one_skips_the_checks_that_need_two_points(self):
        results = Verification(1, [0.5], include_density=False).run()
        skipped = set(result.name for result in results if result.status == SKIPPED)
        self.assertIn('inversion_delta', skipped)
        self.assertIn('pair_ratio', skipped)
        self.assertIn('restriction', skipped)
        self.assertNotIn('sampler_exactness', skipped)
        self.assertTrue(Verification.all_good(results))

    def test_corrupted_decoder_fails_sampler_exactness(self):
        results = Verification(3, [0.5], include_density=False, decoder=reversed_decoder).run()
        statuses = dict(((result.name, result.n), result.status) for result in results)
        self.assertEqual(FAIL, statuses[('sampler_exactness', 3)])
        self.assertFalse(Verification.all_good(results))

    def test_density_checks_are_included_by_default(self):
        names = set(getattr(check, 'name', None) for check in Verification(1, [1.0]).checks())
        self.assertIn('density_marginals', names)
        self.assertIn('product_marginals', names)

    def test_rejects_sizes_outside_enumeration(self):
        self.assertRaises(OracleException, Verification, 0)
        self.assertRaises(OracleException, Verification, 10)


if __name__ == '__main__':
    unittest.main()
