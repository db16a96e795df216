# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import contextlib
import csv
import io
import json
import os
import shutil
import tempfile
import unittest

from permuton import Application, DensityException, PermutonException, QuadratureException
from permuton.Application import EXIT_FAILED, EXIT_OK, EXIT_USAGE
from permuton.ExperimentConfig import M1_COORDINATE

from permuton.test.helpers import create_config_file


def run_app(command, **values):
    stdout = io.StringIO()
    code = Application(command, stdout=stdout, **values).run()
    return code, stdout.getvalue()


def csv_lines(text):
    return text.strip().split('\n')


class TestApplication(unittest.TestCase):

    def setUp(self):
        self.test_env_dir = tempfile.mkdtemp()
        self.config_file_path = os.path.join(self.test_env_dir, 'm1.json')
        create_config_file(self.config_file_path, kind=M1_COORDINATE, beta=1.0, n_list=[20, 40], samples=200,
                           seed=3)

    def tearDown(self):
        shutil.rmtree(self.test_env_dir)

    def test_rejects_unknown_commands_and_formats(self):
        self.assertRaises(PermutonException, Application, 'frobnicate')
        self.assertRaises(PermutonException, Application, 'sample', output_format='xml')

    def test_sample_of_size_one(self):
        self.assertEqual((EXIT_OK, 'permutation,inversions\n1,0\n'), run_app('sample', n=1, q=0.5))

    def test_sample_rows(self):
        code, text = run_app('sample', n=6, beta=2.0, count=5, seed=11)
        self.assertEqual(EXIT_OK, code)
        lines = csv_lines(text)
        self.assertEqual(6, len(lines))
        self.assertTrue(lines[1].startswith('"'))
        self.assertEqual(text, run_app('sample', n=6, beta=2.0, count=5, seed=11)[1])
        self.assertNotEqual(text, run_app('sample', n=6, beta=2.0, count=5, seed=12)[1])

    def test_uniform_samples_reach_every_permutation(self):
        code, text = run_app('sample', n=4, q=1.0, count=2000, output_format='json')
        self.assertEqual(EXIT_OK, code)
        rows = json.loads(text)
        self.assertEqual(2000, len(rows))
        self.assertEqual(24, len(set(tuple(row['permutation']) for row in rows)))
        self.assertTrue(all(0 <= row['inversions'] <= 6 for row in rows))

    def test_sample_needs_exactly_one_parameter(self):
        self.assertEqual(EXIT_USAGE, run_app('sample', n=5)[0])
        self.assertEqual(EXIT_USAGE, run_app('sample', n=5, q=0.5, beta=1.0)[0])
        self.assertEqual(EXIT_USAGE, run_app('sample', n=5, q=-0.5)[0])
        self.assertEqual(EXIT_USAGE, run_app('sample', n=5, q=0.5, count=0)[0])

    def test_sample_writes_to_a_file(self):
        path = os.path.join(self.test_env_dir, 'sample.csv')
        code, text = run_app('sample', n=1, q=0.5, out=path)
        self.assertEqual((EXIT_OK, ''), (code, text))
        with open(path) as f:
            self.assertEqual('permutation,inversions\n1,0\n', f.read())

    def test_uniform_density_table(self):
        code, text = run_app('density', beta=0.0, grid=3)
        self.assertEqual(EXIT_OK, code)
        lines = csv_lines(text)
        self.assertEqual('x,y,u', lines[0])
        self.assertEqual(10, len(lines))
        self.assertEqual('0.5,1,1', lines[6])
        self.assertTrue(all(line.endswith(',1') for line in lines[1:]))

    def test_rho_table(self):
        code, text = run_app('density', density='rho', beta=2.0, gamma=0.0, grid=4, output_format='json')
        self.assertEqual(EXIT_OK, code)
        for row in json.loads(text):
            self.assertAlmostEqual(1.0, row['rho'], places=10)

    def test_density_rejects_bad_arguments(self):
        self.assertEqual(EXIT_USAGE, run_app('density', grid=1)[0])
        self.assertEqual(EXIT_USAGE, run_app('density', density='rho', beta=1.0)[0])
        self.assertEqual(EXIT_USAGE, run_app('density', beta=float('nan'))[0])

    def test_numeric_failures_are_not_usage_errors(self):
        for error in (QuadratureException, DensityException):
            class FailingApplication(Application):
                def run_density(self):
                    raise error('no convergence')

            self.assertEqual(EXIT_FAILED, FailingApplication('density', stdout=io.StringIO()).run())

    def test_experiment_writes_json_and_csv(self):
        out = os.path.join(self.test_env_dir, 'report')
        code, _ = run_app('experiment', config_file_path=self.config_file_path, out=out, threads=2)
        self.assertEqual(EXIT_OK, code)
        with open(out + '.json') as f:
            report = json.load(f)
        self.assertEqual(3, report['config']['seed'])
        self.assertIn('wall_clock_seconds', report)
        with open(out + '.csv') as f:
            self.assertEqual(3, len(f.read().strip().split('\n')))

    def test_experiment_rerun_is_identical(self):
        reports = []
        for threads in (1, 3):
            code, text = run_app('experiment', config_file_path=self.config_file_path, output_format='json',
                                 threads=threads)
            self.assertEqual(EXIT_OK, code)
            report = json.loads(text)
            report.pop('wall_clock_seconds')
            reports.append(report)
        self.assertEqual(reports[0], reports[1])

    def test_experiment_overrides(self):
        code, text = run_app('experiment', config_file_path=self.config_file_path, output_format='json',
                             samples=50, seed=8, threads=1)
        report = json.loads(text)
        self.assertEqual((50, 8), (report['config']['samples'], report['rng']['seed']))

    def test_failed_threshold_exits_with_one(self):
        create_config_file(self.config_file_path, kind=M1_COORDINATE, beta=1.0, n_list=[20], samples=200,
                           thresholds={'20': 1e-9})
        self.assertEqual(EXIT_FAILED, run_app('experiment', config_file_path=self.config_file_path, threads=1)[0])

    def test_bad_configs_exit_with_two(self):
        create_config_file(self.config_file_path, kind=M1_COORDINATE, n_list=[])
        self.assertEqual(EXIT_USAGE, run_app('experiment', config_file_path=self.config_file_path)[0])
        missing = os.path.join(self.test_env_dir, 'missing.json')
        self.assertEqual(EXIT_USAGE, run_app('experiment', config_file_path=missing)[0])

    def test_verify(self):
        code, text = run_app('verify', n=3, q_list=[0.5, 1.0])
        self.assertEqual(EXIT_OK, code)
        rows = list(csv.DictReader(io.StringIO(text)))
        self.assertEqual(['check', 'n', 'q', 'status', 'detail'], list(rows[0].keys()))
        self.assertTrue(all(row['status'] in ('pass', 'skipped') for row in rows))
        self.assertEqual(EXIT_USAGE, run_app('verify', n=12)[0])

    def test_main_exits_with_the_run_code(self):
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            with self.assertRaises(SystemExit) as raised:
                Application.main(['sample', '--n', '3', '--q', '0.5', '--count', '2'])
        self.assertEqual(EXIT_OK, raised.exception.code)
        self.assertEqual(3, len(csv_lines(stdout.getvalue())))

    def test_main_rejects_missing_arguments(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as raised:
                Application.main(['sample', '--q', '0.5'])
        self.assertEqual(EXIT_USAGE, raised.exception.code)

    def test_parser_defaults(self):
        arguments = Application.parser().parse_args(['verify', '--q', '0.5', '2'])
        app = Application.from_arguments(arguments)
        self.assertEqual(Application.DEFAULT_MAX_N, app.n)
        self.assertEqual([0.5, 2.0], app.q_list)
        self.assertEqual('csv', app.output_format)


if __name__ == '__main__':
    unittest.main()
