# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import io
import json
import unittest

from permuton import ExperimentConfig, ExperimentReport
from permuton.CheckResult import FAIL, PASS
from permuton.ExperimentConfig import M1_COORDINATE


def report_for(**overrides):
    values = {'kind': M1_COORDINATE, 'beta': 2.0, 'n_list': [10, 20], 'samples': 50, 'seed': 3}
    values.update(overrides)
    return ExperimentReport(ExperimentConfig(**values))


class TestExperimentReport(unittest.TestCase):

    def test_thresholds_apply_to_the_median(self):
        report = report_for(thresholds={'10': 0.1})
        for replicate, statistic in enumerate((0.05, 0.2, 0.07)):
            report.add_row(10, replicate, statistic, 0.01, 0.1)
        report.evaluate()
        self.assertTrue(report.good)
        self.assertEqual(PASS, report.status)
        self.assertEqual([False], [row['pass'] for row in report.rows if row['statistic'] == 0.2])

    def test_median_above_threshold_fails(self):
        report = report_for(thresholds={'20': 0.1})
        report.add_row(20, 0, 0.3, 0.01)
        report.evaluate()
        self.assertFalse(report.good)
        self.assertEqual(FAIL, report.status)
        self.assertEqual(1, len(report.errors))

    def test_medians_must_decrease_when_required(self):
        report = report_for(require_decreasing=True)
        report.add_row(10, 0, 0.1, 0.01)
        report.add_row(20, 0, 0.1, 0.01)
        self.assertFalse(report.evaluate().good)

        report = report_for(require_decreasing=True)
        report.add_row(10, 0, 0.1, 0.01)
        report.add_row(20, 0, 0.09, 0.01)
        self.assertTrue(report.evaluate().good)

    def test_decrease_compares_the_first_and_last_size_only(self):
        # the medians observed on the shipped coordinate config
        medians = (0.00715986, 0.00613368, 0.00652503, 0.00702722)
        report = report_for(n_list=[500, 1000, 2000, 4000], require_decreasing=True)
        for n, median in zip((500, 1000, 2000, 4000), medians):
            report.add_row(n, 0, median, 0.001)
        self.assertTrue(report.evaluate().good)

        report = report_for(n_list=[500, 1000, 2000, 4000], require_decreasing=True)
        for n, median in zip((500, 1000, 2000, 4000), (0.007, 0.004, 0.003, 0.0071)):
            report.add_row(n, 0, median, 0.001)
        self.assertFalse(report.evaluate().good)
        self.assertIn('n=500 to n=4000', report.errors[0])

    def test_warnings_do_not_fail_the_report(self):
        report = report_for()
        report.add_row(10, 0, 0.1, 0.01)
        report.add_warning('estimate outside the limit bounds')
        self.assertTrue(report.evaluate().good)

    def test_summaries(self):
        report = report_for()
        for replicate, statistic in enumerate((0.3, 0.1, 0.2)):
            report.add_row(10, replicate, statistic, 0.01)
        self.assertEqual({'10': {'median': 0.2, 'min': 0.1, 'max': 0.3, 'replicates': 3}}, report.summaries())
        self.assertEqual([0.2], report.medians())

    def test_json_echoes_config_seed_and_schedule(self):
        report = report_for()
        report.add_row(10, 0, 0.1, 0.01)
        report.add_detail(10, 'a_n', 5)
        report.wall_clock = 1.5
        data = json.loads(report.evaluate().to_json())
        self.assertEqual(M1_COORDINATE, data['kind'])
        self.assertEqual(3, data['config']['seed'])
        self.assertEqual({'seed': 3, 'algorithm': 'PCG64'}, data['rng'])
        self.assertAlmostEqual(0.8, data['schedule']['beta']['10'])
        self.assertEqual({'a_n': 5}, data['details']['10'])
        self.assertEqual(1.5, data['wall_clock_seconds'])
        self.assertEqual(PASS, data['status'])
        self.assertNotIn('wall_clock_seconds', report.to_dict(include_wall_clock=False))

    def test_csv(self):
        report = report_for()
        report.add_row(10, 0, 0.05, 0.01, 0.1)
        report.add_row(20, 1, 0.5, 0.25)
        stream = io.StringIO()
        report.write_csv(stream)
        self.assertEqual('kind,n,replicate,statistic,stderr,threshold,pass\n'
                         'm1_coordinate,10,0,0.050000000000000003,0.01,0.10000000000000001,true\n'
                         'm1_coordinate,20,1,0.5,0.25,,\n', stream.getvalue())


if __name__ == '__main__':
    unittest.main()
