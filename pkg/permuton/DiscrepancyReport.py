# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import json


class DiscrepancyReport(object):
    """The largest deviation between an empirical and a reference measure over a family of grid rectangles."""

    def __init__(self, max_abs_dev, argmax_rect, mode, m, per_rect_devs=None):
        self._max_abs_dev = float(max_abs_dev)
        self._argmax_rect = argmax_rect
        self._mode = mode
        self._m = m
        self._per_rect_devs = per_rect_devs

    @property
    def max_abs_dev(self):
        return self._max_abs_dev

    @property
    def argmax_rect(self):
        return self._argmax_rect

    @property
    def mode(self):
        return self._mode

    @property
    def m(self):
        return self._m

    @property
    def per_rect_devs(self):
        """Signed deviations of the anchored rectangles, when they were kept."""
        return self._per_rect_devs

    def to_dict(self):
        data = {
            'max_abs_dev': self._max_abs_dev,
            'argmax_rect': self._argmax_rect.to_dict(),
            'mode': self._mode,
            'm': self._m,
        }
        if self._per_rect_devs is not None:
            data['per_rect_devs'] = [[float(v) for v in row] for row in self._per_rect_devs]
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)
