# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import argparse
import csv
import json
import logging
import sys
import traceback

from permuton.DensityParams import RhoParams
from permuton.Experiment import Experiment
from permuton.ExactDistribution import OracleException
from permuton.ExperimentConfig import ConfigurationException, ExperimentConfig
from permuton.helpers import PermutonException, format_real
from permuton.LimitDensity import LimitDensity
from permuton.MallowsParams import MallowsParams, ParameterException, q_from_beta
from permuton.MallowsSampler import MallowsSampler
from permuton.ProductDensity import ProductDensity
from permuton.SeedSpec import SeedSpec
from permuton.Verification import Verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

COMMANDS = ('sample', 'density', 'experiment', 'verify')
FORMATS = ('csv', 'json')
# bad arguments or config files; any other PermutonException is a failed run
USAGE_EXCEPTIONS = (ParameterException, ConfigurationException, OracleException)


class Application(object):
    DEFAULT_COUNT = 1
    DEFAULT_SEED = 0
    DEFAULT_GRID = 11
    DEFAULT_FORMAT = 'csv'
    DEFAULT_MAX_N = 5
    DEFAULT_DENSITY = 'u'

    def __init__(self, command, n=None, q=None, beta=None, gamma=None, count=DEFAULT_COUNT, seed=None,
                 grid=DEFAULT_GRID, samples=None, out=None, output_format=DEFAULT_FORMAT, threads=None,
                 config_file_path=None, q_list=None, density=DEFAULT_DENSITY, stdout=None):
        if command not in COMMANDS:
            raise PermutonException('Unknown command "%s"' % command)
        if output_format not in FORMATS:
            raise PermutonException('Unknown output format "%s"' % output_format)
        self.command = command
        self.n = n
        self.q = q
        self.beta = beta
        self.gamma = gamma
        self.count = count
        self.seed = seed
        self.grid = grid
        self.samples = samples
        self.out = out
        self.output_format = output_format
        self.threads = threads
        self.config_file_path = config_file_path
        self.q_list = q_list
        self.density = density
        self.stdout = stdout or sys.stdout

    def run(self):
        try:
            return getattr(self, 'run_' + self.command)()
        except USAGE_EXCEPTIONS as e:
            logger.error('%s', e)
            return EXIT_USAGE
        except PermutonException as e:
            logger.error('%s: %s', type(e).__name__, e)
            return EXIT_FAILED
        except Exception:
            traceback.print_exc(file=sys.stderr)
            return EXIT_FAILED

    def _open_output(self, path=None):
        path = path or self.out
        if path is None:
            return self.stdout, False
        return open(path, 'w', newline=''), True

    def _emit(self, header, rows):
        stream, owned = self._open_output()
        try:
            if self.output_format == 'json':
                json.dump([dict(zip(header, row)) for row in rows], stream, sort_keys=True, indent=2)
                stream.write('\n')
            else:
                writer = csv.writer(stream, lineterminator='\n')
                writer.writerow(header)
                writer.writerows(rows)
        finally:
            if owned:
                stream.close()

    def _mallows_params(self):
        if self.n is None:
            raise ParameterException('sample needs --n')
        if (self.q is None) == (self.beta is None):
            raise ParameterException('sample needs exactly one of --q and --beta')
        q = self.q if self.q is not None else q_from_beta(self.n, self.beta)
        return MallowsParams(self.n, q)

    def run_sample(self):
        """Row k is the permutation drawn from stream k of the seed."""
        params = self._mallows_params()
        if self.count < 1:
            raise ParameterException('--count must be positive, got %r' % self.count)
        sampler = MallowsSampler(params)
        seed = SeedSpec(self.DEFAULT_SEED if self.seed is None else self.seed)
        logger.info('Sampling %d permutations with %r', self.count, params)
        rows = []
        for stream in range(self.count):
            p = sampler.sample(seed, stream)
            if self.output_format == 'json':
                rows.append((list(p.as_tuple()), p.inversion_number()))
            else:
                rows.append((p.to_csv(), p.inversion_number()))
        self._emit(('permutation', 'inversions'), rows)
        return EXIT_OK

    def run_density(self):
        if self.grid < 2:
            raise ParameterException('--grid must be at least 2, got %r' % self.grid)
        beta = 0.0 if self.beta is None else self.beta
        if self.density == 'rho':
            if self.gamma is None:
                raise ParameterException('density rho needs --gamma')
            evaluate = ProductDensity(RhoParams(beta, self.gamma)).density
        else:
            evaluate = LimitDensity(beta).density
        step = 1.0 / (self.grid - 1)
        rows = []
        for i in range(self.grid):
            for j in range(self.grid):
                x, y = i * step, j * step
                value = evaluate(x, y)
                if self.output_format == 'json':
                    rows.append((x, y, value))
                else:
                    rows.append((format_real(x), format_real(y), format_real(value)))
        self._emit(('x', 'y', self.density), rows)
        return EXIT_OK

    def run_experiment(self):
        overrides = {}
        if self.samples is not None:
            overrides['samples'] = self.samples
        if self.seed is not None:
            overrides['seed'] = self.seed
        config = ExperimentConfig(self.config_file_path, **overrides)
        report = Experiment(config, self.threads).run()
        for warning in report.warnings or []:
            logger.warning('%s', warning)
        for error in report.errors or []:
            logger.error('%s', error)
        if self.out is not None:
            with open(self.out + '.json', 'w') as f:
                f.write(report.to_json())
                f.write('\n')
            with open(self.out + '.csv', 'w', newline='') as f:
                report.write_csv(f)
            logger.info('Wrote %s.json and %s.csv', self.out, self.out)
        elif self.output_format == 'json':
            self.stdout.write(report.to_json())
            self.stdout.write('\n')
        else:
            report.write_csv(self.stdout)
        return EXIT_OK if report.good else EXIT_FAILED

    def run_verify(self):
        max_n = self.DEFAULT_MAX_N if self.n is None else self.n
        results = Verification(max_n, self.q_list).run()
        rows = [result.to_row() for result in results]
        header = ('check', 'n', 'q', 'status', 'detail')
        self._emit(header, [tuple(row[key] for key in header) for row in rows])
        failed = [result for result in results if not result.good]
        if failed:
            logger.error('%d of %d checks failed', len(failed), len(results))
            return EXIT_FAILED
        return EXIT_OK

    @staticmethod
    def parser():
        parser = argparse.ArgumentParser(
            prog='permuton',
            description='Sample Mallows permutations, evaluate their limit densities and check the '
                        'finite-n identities and limit theorems they satisfy.')
        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
        subparsers.required = True

        def common(subparser):
            subparser.add_argument('--out', metavar='PATH', help='write to PATH instead of standard output')
            subparser.add_argument('--format', dest='output_format', choices=FORMATS,
                                   default=Application.DEFAULT_FORMAT, help='output format (default: csv)')
            subparser.add_argument('-v', '--verbose', action='store_true', help='log debugging detail to stderr')

        sample = subparsers.add_parser('sample', help='draw Mallows permutations')
        sample.add_argument('--n', type=int, required=True, help='permutation size')
        sample.add_argument('--q', type=float, help='Mallows parameter q > 0')
        sample.add_argument('--beta', type=float, help='use q = 1 - beta/n')
        sample.add_argument('--count', type=int, default=Application.DEFAULT_COUNT, help='number of permutations')
        sample.add_argument('--seed', type=int, default=Application.DEFAULT_SEED, help='master seed')
        common(sample)

        density = subparsers.add_parser('density', help='tabulate u or rho on a grid')
        density.add_argument('density', nargs='?', choices=('u', 'rho'), default=Application.DEFAULT_DENSITY)
        density.add_argument('--beta', type=float, default=0.0)
        density.add_argument('--gamma', type=float, help='second parameter of rho')
        density.add_argument('--grid', type=int, default=Application.DEFAULT_GRID,
                             help='grid points per axis, at least 2')
        common(density)

        experiment = subparsers.add_parser('experiment', help='run a Monte Carlo experiment from a JSON config')
        experiment.add_argument('config_file_path', metavar='CONFIG')
        experiment.add_argument('--samples', type=int, help='override the samples of the config')
        experiment.add_argument('--seed', type=int, help='override the seed of the config')
        experiment.add_argument('--threads', type=int, help='worker threads (default: one per CPU)')
        common(experiment)

        verify = subparsers.add_parser('verify', help='run the exact checks for n = 1..N')
        verify.add_argument('--n', type=int, default=Application.DEFAULT_MAX_N, help='largest n, at most 9')
        verify.add_argument('--q', dest='q_list', type=float, nargs='+', help='values of q to check')
        common(verify)
        return parser

    @staticmethod
    def from_arguments(arguments):
        values = vars(arguments).copy()
        values.pop('verbose', None)
        return Application(**values)

    @staticmethod
    def main(argv=None):
        arguments = Application.parser().parse_args(argv)
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if arguments.verbose else logging.INFO,
                            format='%(asctime)s %(name)s %(levelname)s %(message)s')
        try:
            app = Application.from_arguments(arguments)
        except PermutonException as e:
            logger.error('%s', e)
            sys.exit(EXIT_USAGE)
        sys.exit(app.run())


if __name__ == '__main__':
    Application.main()
