# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import csv
import json

import numpy as np

from permuton.CheckResult import CheckResult
from permuton.helpers import format_real

CSV_COLUMNS = ('kind', 'n', 'replicate', 'statistic', 'stderr', 'threshold', 'pass')
THRESHOLD_NOTE = ('thresholds are engineering choices: the limit theorems give no finite-n rates')


class ExperimentReport(CheckResult):
    """
    Per-(n, replicate) statistics of an experiment with their summaries, the
    echoed config and the q_n schedule, so that every number can be
    regenerated from the report alone.
    """

    def __init__(self, config):
        CheckResult.__init__(self, config.kind)
        self._config = config
        self._rows = []
        self._details = {}
        self._wall_clock = None

    @property
    def config(self):
        return self._config

    @property
    def rows(self):
        return self._rows

    @property
    def details(self):
        return self._details

    @property
    def wall_clock(self):
        return self._wall_clock

    @wall_clock.setter
    def wall_clock(self, seconds):
        self._wall_clock = seconds

    def add_row(self, n, replicate, statistic, stderr, threshold=None, passed=None):
        if passed is None and threshold is not None:
            passed = statistic <= threshold
        self._rows.append({
            'kind': self._config.kind,
            'n': n,
            'replicate': replicate,
            'statistic': float(statistic),
            'stderr': float(stderr),
            'threshold': None if threshold is None else float(threshold),
            'pass': None if passed is None else bool(passed),
        })

    def add_detail(self, n, key, value):
        self._details.setdefault(str(n), {})[key] = value

    def statistics(self, n):
        return [row['statistic'] for row in self._rows if row['n'] == n]

    def summaries(self):
        summaries = {}
        for n in self._config.n_list:
            values = self.statistics(n)
            if values:
                summaries[str(n)] = {
                    'median': float(np.median(values)),
                    'min': float(min(values)),
                    'max': float(max(values)),
                    'replicates': len(values),
                }
        return summaries

    def medians(self):
        return [float(np.median(self.statistics(n))) for n in self._config.n_list if self.statistics(n)]

    def evaluate(self):
        """Apply the hard acceptance thresholds and set the verdict."""
        for n, bound in sorted(self._config.thresholds.items()):
            values = self.statistics(n)
            if not values:
                continue
            median = float(np.median(values))
            if median > bound:
                self.add_error('n=%d: median statistic %.6g exceeds threshold %.6g' % (n, median, bound))
            else:
                self.add_message('n=%d: median statistic %.6g within threshold %.6g' % (n, median, bound))
        if self._config.require_decreasing:
            # first against last n; the sizes in between are reported, not judged
            sizes = [n for n in self._config.n_list if self.statistics(n)]
            medians = self.medians()
            if len(medians) > 1 and medians[-1] >= medians[0]:
                self.add_error('median statistic does not decrease from n=%d to n=%d: %.6g -> %.6g'
                               % (sizes[0], sizes[-1], medians[0], medians[-1]))
        self.mark_as_good()
        return self

    def to_dict(self, include_wall_clock=True):
        data = {
            'kind': self._config.kind,
            'config': self._config.to_dict(),
            'rng': self._config.seed.to_dict(),
            'schedule': self._config.schedule(),
            'rows': self._rows,
            'summaries': self.summaries(),
            'details': self._details,
            'status': self.status,
            'errors': self.errors or [],
            'warnings': self.warnings or [],
            'messages': self.messages or [],
            'note': THRESHOLD_NOTE,
        }
        if include_wall_clock:
            data['wall_clock_seconds'] = self._wall_clock
        return data

    def to_json(self, include_wall_clock=True):
        return json.dumps(self.to_dict(include_wall_clock), sort_keys=True, indent=2)

    def write_csv(self, stream):
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for row in self._rows:
            writer.writerow([
                row['kind'],
                row['n'],
                row['replicate'],
                format_real(row['statistic']),
                format_real(row['stderr']),
                '' if row['threshold'] is None else format_real(row['threshold']),
                '' if row['pass'] is None else str(bool(row['pass'])).lower(),
            ])
