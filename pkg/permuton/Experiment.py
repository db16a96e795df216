# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

"""
Monte Carlo experiments on Mallows permutations with q_n = 1 - beta/n.

Every (n, replicate) pair is one task. Task k draws from stream k of the
master seed, tasks run on a thread pool and their results are folded in task
order, so a report does not depend on the number of threads.
"""

import logging
import math
import multiprocessing
import time
from multiprocessing.pool import ThreadPool

import numpy as np

from permuton.DensityParams import DensityParams, RhoParams
from permuton.ExactDistribution import ExactDistribution
from permuton.ExperimentConfig import (COVARIANCE_DECAY, INTERVAL_BOUNDS, M1_COORDINATE, M2_PRODUCT, T1_SINGLE,
                                       UNIFORM_MARGINAL, ConfigurationException)
from permuton.ExperimentReport import ExperimentReport
from permuton.GridCounts import GridCounts
from permuton.helpers import value_bounds
from permuton.LimitDensity import LimitDensity
from permuton.MallowsParams import BetaSchedule
from permuton.MallowsSampler import MallowsSampler
from permuton.ProductDensity import ProductDensity
from permuton.Statistics import ks_statistic

logger = logging.getLogger(__name__)

# standard deviation of the limiting Kolmogorov distribution
KOLMOGOROV_SD = 0.2603
# sizes at which exact covariances and marginals come from enumeration
EXACT_MAX_N = 7
INDEX_GRID_POINTS = 20


def position_for(a, n):
    """a_n = ceil(a * n), clamped to 1..n."""
    return min(n, max(1, int(math.ceil(a * n - 1e-9))))


def index_grid(n, points=INDEX_GRID_POINTS):
    """The positions ceil(k n / points) for k = 1..points, without repeats."""
    return sorted(set(-(-k * n // points) for k in range(1, points + 1)))


def covariance_positions(n):
    """Corners, quartiles and the midpoint with their neighbours."""
    mid = -(-n // 2)
    candidates = [1, 2, -(-n // 4), mid, mid + 1, -(-3 * n // 4), n - 1, n]
    return sorted(set(i for i in candidates if 1 <= i <= n))


class Experiment(object):
    def __init__(self, config, threads=None):
        self._config = config
        self._threads = threads or multiprocessing.cpu_count()
        self._reference_cells = {}

    @property
    def config(self):
        return self._config

    @property
    def threads(self):
        return self._threads

    def run(self):
        runners = {
            M1_COORDINATE: self.run_m1,
            M2_PRODUCT: self.run_m2,
            T1_SINGLE: self.run_t1,
            COVARIANCE_DECAY: self.run_covariance_decay,
            UNIFORM_MARGINAL: self.run_uniform_marginal,
            INTERVAL_BOUNDS: self.run_interval_bounds,
        }
        start = time.time()
        report = runners[self._config.kind]()
        report.wall_clock = time.time() - start
        logger.info('%s finished in %.1f s: %s', self._config.kind, report.wall_clock, report.status)
        return report

    def _require(self, kind):
        if self._config.kind != kind:
            raise ConfigurationException('Expected a %s config, got %s' % (kind, self._config.kind))

    def _tasks(self, sizes=None):
        sizes = self._config.n_list if sizes is None else sizes
        replicates = self._config.replicates
        tasks = []
        for position, n in enumerate(self._config.n_list):
            if n not in sizes:
                continue
            for replicate in range(replicates):
                tasks.append((position * replicates + replicate, n, replicate))
        return tasks

    def _map(self, task_function, tasks):
        """Run the tasks on the pool and return their results in task order."""
        def run(task):
            stream, n, replicate = task
            return task_function(n, replicate, self._config.seed.generator(stream))

        if self._threads == 1 or len(tasks) < 2:
            return [run(task) for task in tasks]
        pool = ThreadPool(min(self._threads, len(tasks)))
        try:
            return list(pool.imap(run, tasks))
        finally:
            pool.close()
            pool.join()

    def _draw_rows(self, beta, n, count, rng):
        return MallowsSampler(BetaSchedule(beta).params(n)).sample_rows(count, rng)

    def _draw_one(self, beta, n, rng):
        return MallowsSampler(BetaSchedule(beta).params(n)).sample_with(rng)

    def _cells(self, key, mass_function):
        # computed before the pool starts so every task reads the same table
        if key not in self._reference_cells:
            self._reference_cells[key] = GridCounts.reference_cells(mass_function, self._config.grid_m)
        return self._reference_cells[key]

    def _threshold(self, n):
        return self._config.thresholds.get(n)

    def run_m1(self):
        """KS distance of p(a_n)/n from the limit law with density u(a, .)."""
        self._require(M1_COORDINATE)
        config = self._config
        density = LimitDensity(DensityParams(config.beta))

        def cdf(y):
            return density.cdf(np.full_like(y, config.a), y)

        def task(n, replicate, rng):
            column = position_for(config.a, n) - 1
            values = np.concatenate([rows[:, column] for rows in self._draw_rows(config.beta, n, config.samples, rng)])
            return ks_statistic(values / float(n), cdf)

        report = ExperimentReport(config)
        tasks = self._tasks()
        for (_, n, replicate), statistic in zip(tasks, self._map(task, tasks)):
            report.add_row(n, replicate, statistic, KOLMOGOROV_SD / math.sqrt(config.samples), self._threshold(n))
        for n in config.n_list:
            report.add_detail(n, 'a_n', position_for(config.a, n))
        return report.evaluate()

    def run_m2(self):
        """Grid discrepancy of t o p against rho, for independent p (beta) and t (gamma)."""
        self._require(M2_PRODUCT)
        config = self._config
        rho = ProductDensity(RhoParams(config.beta, config.gamma))
        cells = self._cells(('rho', config.beta, config.gamma), rho.rect_mass)

        def task(n, replicate, rng):
            p = self._draw_one(config.beta, n, rng)
            t = self._draw_one(config.gamma, n, rng)
            grid = GridCounts.from_permutation(t.compose(p), config.grid_m)
            relabeled = GridCounts.from_pair(p.inverse(), t, config.grid_m)
            return grid.discrepancy(cells, config.mode).max_abs_dev, np.array_equal(grid.counts, relabeled.counts)

        report = ExperimentReport(config)
        tasks = self._tasks()
        for (_, n, replicate), (statistic, same) in zip(tasks, self._map(task, tasks)):
            if not same:
                report.add_error('n=%d replicate %d: grid of t o p differs from grid of (p^-1, t)' % (n, replicate))
            report.add_row(n, replicate, statistic, 0.5 / math.sqrt(n), self._threshold(n))
        return report.evaluate()

    def run_t1(self):
        """Grid discrepancy of one Mallows permutation against u for reference_beta."""
        self._require(T1_SINGLE)
        config = self._config
        density = LimitDensity(DensityParams(config.reference_beta))
        cells = self._cells(('u', config.reference_beta), density.rect_mass)

        def task(n, replicate, rng):
            p = self._draw_one(config.beta, n, rng)
            return GridCounts.from_permutation(p, config.grid_m).discrepancy(cells, config.mode).max_abs_dev

        report = ExperimentReport(config)
        tasks = self._tasks()
        for (_, n, replicate), statistic in zip(tasks, self._map(task, tasks)):
            report.add_row(n, replicate, statistic, 0.5 / math.sqrt(n), self._threshold(n))
        return report.evaluate()

    def run_covariance_decay(self):
        """
        The largest |Cov(1_A(p(i)/n), 1_B(p(j)/n))| over i != j: exact for
        small n, over a fixed set of positions by Monte Carlo otherwise.
        """
        self._require(COVARIANCE_DECAY)
        config = self._config
        interval_b = config.interval_b or config.interval
        report = ExperimentReport(config)

        for n in config.n_list:
            if n > EXACT_MAX_N:
                continue
            bounds_a = value_bounds(config.interval[0], config.interval[1], n)
            bounds_b = value_bounds(interval_b[0], interval_b[1], n)
            distribution = ExactDistribution.enumerate_measure(n, BetaSchedule(config.beta).q(n))
            largest, pair = distribution.max_indicator_covariance(bounds_a, bounds_b)
            report.add_detail(n, 'exact', True)
            report.add_detail(n, 'argmax_pair', pair)
            report.add_row(n, 0, largest, 0.0, self._threshold(n))

        def task(n, replicate, rng):
            positions = np.array(covariance_positions(n)) - 1
            lo_a, hi_a = value_bounds(config.interval[0], config.interval[1], n)
            lo_b, hi_b = value_bounds(interval_b[0], interval_b[1], n)
            sum_x = np.zeros(positions.size)
            sum_y = np.zeros(positions.size)
            sum_xy = np.zeros((positions.size, positions.size))
            for rows in self._draw_rows(config.beta, n, config.samples, rng):
                values = rows[:, positions]
                x = ((values >= lo_a) & (values <= hi_a)).astype(float)
                y = ((values >= lo_b) & (values <= hi_b)).astype(float)
                sum_x += x.sum(axis=0)
                sum_y += y.sum(axis=0)
                sum_xy += x.T.dot(y)
            count = float(config.samples)
            covariance = sum_xy / count - np.outer(sum_x / count, sum_y / count)
            np.fill_diagonal(covariance, 0.0)
            return float(np.abs(covariance).max())

        tasks = self._tasks([n for n in config.n_list if n > EXACT_MAX_N])
        for (_, n, replicate), statistic in zip(tasks, self._map(task, tasks)):
            report.add_row(n, replicate, statistic, 0.25 / math.sqrt(config.samples), self._threshold(n))
        for n in config.n_list:
            if n > EXACT_MAX_N:
                report.add_detail(n, 'positions', covariance_positions(n))
        return report.evaluate()

    def run_uniform_marginal(self):
        """The largest |P(p(i)/n in A) - integral of u(i/n, y) over A| over the index grid."""
        self._require(UNIFORM_MARGINAL)
        config = self._config
        y1, y2 = config.interval
        density = LimitDensity(DensityParams(config.beta))

        def limit_probabilities(n):
            x = np.array(index_grid(n), dtype=float) / n
            return density.cdf(x, np.full_like(x, y2)) - density.cdf(x, np.full_like(x, y1))

        def task(n, replicate, rng):
            positions = np.array(index_grid(n)) - 1
            lo, hi = value_bounds(y1, y2, n)
            hits = np.zeros(positions.size)
            for rows in self._draw_rows(config.beta, n, config.samples, rng):
                values = rows[:, positions]
                hits += ((values >= lo) & (values <= hi)).sum(axis=0)
            return hits / float(config.samples)

        report = ExperimentReport(config)
        tasks = self._tasks()
        for (_, n, replicate), estimates in zip(tasks, self._map(task, tasks)):
            expected = limit_probabilities(n)
            stderr = float(np.sqrt(expected * (1.0 - expected) / config.samples).max())
            report.add_row(n, replicate, float(np.abs(estimates - expected).max()), stderr, self._threshold(n))
            if n <= EXACT_MAX_N and replicate == 0:
                distribution = ExactDistribution.enumerate_measure(n, BetaSchedule(config.beta).q(n))
                exact = np.array([distribution.interval_probability(i, value_bounds(y1, y2, n)) for i in index_grid(n)])
                noise = np.sqrt(np.maximum(exact * (1.0 - exact), 1e-300) / config.samples)
                report.add_detail(n, 'exact_max_deviation', float(np.abs(exact - expected).max()))
                report.add_detail(n, 'monte_carlo_vs_exact_max_z', float((np.abs(estimates - exact) / noise).max()))
        return report.evaluate()

    def run_interval_bounds(self):
        """
        P(p(a_n)/n in [y1, y2]) against (y2 - y1) e^(-|beta|) and
        (y2 - y1) e^|beta|, widened by the slack factor. The bounds hold only
        in the limit, so an estimate outside them is a warning.
        """
        self._require(INTERVAL_BOUNDS)
        config = self._config
        y1, y2 = config.interval
        width = y2 - y1
        spread = math.exp(abs(config.beta))
        lower = width / spread / config.slack
        upper = width * spread * config.slack

        def task(n, replicate, rng):
            column = position_for(config.a, n) - 1
            lo, hi = value_bounds(y1, y2, n)
            hits = 0
            for rows in self._draw_rows(config.beta, n, config.samples, rng):
                hits += int(np.count_nonzero((rows[:, column] >= lo) & (rows[:, column] <= hi)))
            return hits / float(config.samples)

        report = ExperimentReport(config)
        tasks = self._tasks()
        for (_, n, replicate), estimate in zip(tasks, self._map(task, tasks)):
            inside = lower <= estimate <= upper
            if not inside:
                report.add_warning('n=%d replicate %d: estimate %.6g outside [%.6g, %.6g]'
                                   % (n, replicate, estimate, lower, upper))
            stderr = math.sqrt(estimate * (1.0 - estimate) / config.samples)
            report.add_row(n, replicate, estimate, stderr, upper, inside)
        for n in config.n_list:
            report.add_detail(n, 'lower', lower)
            report.add_detail(n, 'upper', upper)
            if n <= EXACT_MAX_N:
                self._exact_interval_bounds(report, n)
        return report.evaluate()

    def _exact_interval_bounds(self, report, n):
        """
        With K of the n values in the interval and R = max(q**(n-1), q**(1-n)),
        the marginal ratio bound gives K / (K + R (n - K)) <= P <= K R / (K R + n - K).
        """
        config = self._config
        q = BetaSchedule(config.beta).q(n)
        lo, hi = value_bounds(config.interval[0], config.interval[1], n)
        hits = max(0, hi - lo + 1)
        spread = math.exp(abs(math.log(q)) * (n - 1))
        lower = hits / (hits + spread * (n - hits))
        upper = hits * spread / (hits * spread + n - hits) if hits else 0.0
        probability = ExactDistribution.enumerate_measure(n, q).interval_probability(position_for(config.a, n), (lo, hi))
        report.add_detail(n, 'exact', {'probability': probability, 'lower': lower, 'upper': upper})
        if not lower - 1e-12 <= probability <= upper + 1e-12:
            report.add_error('n=%d: exact probability %.12g outside [%.12g, %.12g]' % (n, probability, lower, upper))
