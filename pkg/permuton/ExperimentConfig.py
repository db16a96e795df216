# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import json
import math
import os

from permuton.GridCounts import ALL_CELLS, ANCHORED, MODES
from permuton.helpers import PermutonException
from permuton.MallowsParams import BetaSchedule, ParameterException
from permuton.SeedSpec import SeedSpec

M1_COORDINATE = 'm1_coordinate'
M2_PRODUCT = 'm2_product'
T1_SINGLE = 't1_single'
COVARIANCE_DECAY = 'covariance_decay'
UNIFORM_MARGINAL = 'uniform_marginal'
INTERVAL_BOUNDS = 'interval_bounds'
KINDS = (M1_COORDINATE, M2_PRODUCT, T1_SINGLE, COVARIANCE_DECAY, UNIFORM_MARGINAL, INTERVAL_BOUNDS)
INTERVAL_KINDS = (COVARIANCE_DECAY, UNIFORM_MARGINAL, INTERVAL_BOUNDS)


class ConfigurationException(PermutonException):
    pass


class ExperimentConfig(object):
    """
    The parameters of one experiment, read from a JSON file or a dict.

    Keys: kind, beta, gamma (m2_product), n_list, samples, replicates,
    grid_m, mode, a, interval, interval_b, slack, reference_beta, seed,
    thresholds (a map from n to the largest acceptable median statistic) and
    require_decreasing.
    """

    DEFAULT_SAMPLES = 1000
    DEFAULT_REPLICATES = 1
    DEFAULT_GRID_M = 10
    DEFAULT_A = 0.5
    DEFAULT_SLACK = 1.1
    DEFAULT_SEED = 0
    # all_cells inspects O(m**4) rectangles
    ALL_CELLS_MAX_M = 20

    def __init__(self, config_file_path=None, **values):
        if config_file_path is not None:
            if not os.path.exists(config_file_path):
                raise ConfigurationException('Config file "%s" does not exist or is not accessible.' % config_file_path)
            with open(config_file_path, 'r') as f:
                try:
                    loaded = json.load(f)
                except ValueError as e:
                    raise ConfigurationException('Config file "%s" is not valid JSON: %s' % (config_file_path, e))
            if not isinstance(loaded, dict):
                raise ConfigurationException('Config file "%s" must hold a JSON object' % config_file_path)
            loaded.update(values)
            values = loaded
        self._load(values)

    @staticmethod
    def from_dict(values):
        return ExperimentConfig(**values)

    def _load(self, values):
        unknown = set(values) - set(['kind', 'beta', 'gamma', 'n_list', 'samples', 'replicates', 'grid_m', 'mode',
                                     'a', 'interval', 'interval_b', 'slack', 'reference_beta', 'seed',
                                     'thresholds', 'require_decreasing'])
        if unknown:
            raise ConfigurationException('Unknown config keys: %s' % ', '.join(sorted(unknown)))
        self.kind = values.get('kind')
        if self.kind not in KINDS:
            raise ConfigurationException('kind must be one of %s, got %r' % (', '.join(KINDS), self.kind))
        self.beta = self._real(values, 'beta', 0.0)
        self.gamma = self._real(values, 'gamma', None if self.kind == M2_PRODUCT else 0.0)
        self.reference_beta = self._real(values, 'reference_beta', self.beta)

        self.n_list = values.get('n_list')
        if not isinstance(self.n_list, list) or not self.n_list:
            raise ConfigurationException('n_list must be a nonempty list of sizes')
        if any(not isinstance(n, int) or isinstance(n, bool) or n < 1 for n in self.n_list):
            raise ConfigurationException('n_list must hold positive integers, got %r' % (self.n_list,))
        if any(b <= a for a, b in zip(self.n_list, self.n_list[1:])):
            raise ConfigurationException('n_list must be strictly ascending, got %r' % (self.n_list,))

        self.samples = self._count(values, 'samples', self.DEFAULT_SAMPLES)
        self.replicates = self._count(values, 'replicates', self.DEFAULT_REPLICATES)
        self.grid_m = self._count(values, 'grid_m', self.DEFAULT_GRID_M)
        self.mode = values.get('mode', ALL_CELLS if self.grid_m <= self.ALL_CELLS_MAX_M else ANCHORED)
        if self.mode not in MODES:
            raise ConfigurationException('mode must be one of %s, got %r' % (', '.join(MODES), self.mode))
        self.a = self._real(values, 'a', self.DEFAULT_A)
        if not 0.0 <= self.a <= 1.0:
            raise ConfigurationException('a must lie in [0, 1], got %r' % self.a)
        self.slack = self._real(values, 'slack', self.DEFAULT_SLACK)
        if self.slack < 1.0:
            raise ConfigurationException('slack must be at least 1, got %r' % self.slack)

        self.interval = self._interval(values, 'interval', self.kind in INTERVAL_KINDS)
        self.interval_b = self._interval(values, 'interval_b', False)

        seed = values.get('seed', self.DEFAULT_SEED)
        try:
            self.seed = SeedSpec(seed)
        except (ParameterException, TypeError, ValueError):
            raise ConfigurationException('seed must be a non-negative integer, got %r' % (seed,))

        thresholds = values.get('thresholds') or {}
        if not isinstance(thresholds, dict):
            raise ConfigurationException('thresholds must map sizes to bounds')
        try:
            self.thresholds = dict((int(n), float(bound)) for n, bound in thresholds.items())
        except (TypeError, ValueError):
            raise ConfigurationException('thresholds must map sizes to bounds, got %r' % (thresholds,))
        self.require_decreasing = bool(values.get('require_decreasing', False))

        for beta in (self.beta, self.gamma):
            try:
                for n in self.n_list:
                    BetaSchedule(beta).q(n)
            except ParameterException as e:
                raise ConfigurationException(str(e))

    @staticmethod
    def _real(values, key, default):
        value = values.get(key, default)
        if value is None:
            raise ConfigurationException('%s is required' % key)
        if isinstance(value, bool) or not isinstance(value, (int, float)) or math.isnan(value) or math.isinf(value):
            raise ConfigurationException('%s must be a finite number, got %r' % (key, value))
        return float(value)

    @staticmethod
    def _count(values, key, default):
        value = values.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ConfigurationException('%s must be a positive integer, got %r' % (key, value))
        return value

    @staticmethod
    def _interval(values, key, required):
        value = values.get(key)
        if value is None:
            if required:
                raise ConfigurationException('%s is required for this kind of experiment' % key)
            return None
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ConfigurationException('%s must be a pair [y1, y2], got %r' % (key, value))
        y1, y2 = ExperimentConfig._real({'y': value[0]}, 'y', None), ExperimentConfig._real({'y': value[1]}, 'y', None)
        if not 0.0 <= y1 <= y2 <= 1.0:
            raise ConfigurationException('%s must satisfy 0 <= y1 <= y2 <= 1, got %r' % (key, value))
        return (y1, y2)

    def schedule(self):
        """The q_n actually used for every n, per parameter."""
        schedule = {'beta': BetaSchedule(self.beta).to_dict(self.n_list)}
        if self.kind == M2_PRODUCT:
            schedule['gamma'] = BetaSchedule(self.gamma).to_dict(self.n_list)
        return schedule

    def to_dict(self):
        return {
            'kind': self.kind,
            'beta': self.beta,
            'gamma': self.gamma,
            'reference_beta': self.reference_beta,
            'n_list': list(self.n_list),
            'samples': self.samples,
            'replicates': self.replicates,
            'grid_m': self.grid_m,
            'mode': self.mode,
            'a': self.a,
            'slack': self.slack,
            'interval': None if self.interval is None else list(self.interval),
            'interval_b': None if self.interval_b is None else list(self.interval_b),
            'seed': self.seed.master_seed,
            'thresholds': dict((str(n), bound) for n, bound in sorted(self.thresholds.items())),
            'require_decreasing': self.require_decreasing,
        }
