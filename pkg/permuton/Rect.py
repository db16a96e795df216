# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import numpy as np

from permuton.helpers import PermutonException


class RectException(PermutonException):
    pass


class Rect(object):
    """
    An axis-aligned rectangle in [0,1]^2. Each side is open or closed; the
    default is the half-open rectangle (x1, x2] x (y1, y2].
    """

    def __init__(self, x1, x2, y1, y2, left_closed=False, right_closed=True,
                 bottom_closed=False, top_closed=True):
        if not (0.0 <= x1 <= x2 <= 1.0 and 0.0 <= y1 <= y2 <= 1.0):
            raise RectException('Rectangle [%r, %r] x [%r, %r] is not inside the unit square' % (x1, x2, y1, y2))
        self._x1 = float(x1)
        self._x2 = float(x2)
        self._y1 = float(y1)
        self._y2 = float(y2)
        self._left_closed = left_closed
        self._right_closed = right_closed
        self._bottom_closed = bottom_closed
        self._top_closed = top_closed

    @staticmethod
    def closed(x1, x2, y1, y2):
        return Rect(x1, x2, y1, y2, True, True, True, True)

    @staticmethod
    def unit():
        return Rect.closed(0.0, 1.0, 0.0, 1.0)

    @staticmethod
    def grid_cell(a1, a2, b1, b2, m):
        """The half-open rectangle (a1/m, a2/m] x (b1/m, b2/m]."""
        m = float(m)
        return Rect(a1 / m, a2 / m, b1 / m, b2 / m)

    @property
    def x1(self):
        return self._x1

    @property
    def x2(self):
        return self._x2

    @property
    def y1(self):
        return self._y1

    @property
    def y2(self):
        return self._y2

    @property
    def area(self):
        return (self._x2 - self._x1) * (self._y2 - self._y1)

    def contains(self, x, y):
        """Membership of each point (x, y); works elementwise on arrays."""
        x = np.asarray(x)
        y = np.asarray(y)
        inside_x = (x >= self._x1 if self._left_closed else x > self._x1) & \
            (x <= self._x2 if self._right_closed else x < self._x2)
        inside_y = (y >= self._y1 if self._bottom_closed else y > self._y1) & \
            (y <= self._y2 if self._top_closed else y < self._y2)
        return inside_x & inside_y

    def to_dict(self):
        return {
            'x': [self._x1, self._x2],
            'y': [self._y1, self._y2],
            'closed': [self._left_closed, self._right_closed, self._bottom_closed, self._top_closed],
        }

    def __repr__(self):
        return '%s%r, %r%s x %s%r, %r%s' % (
            '[' if self._left_closed else '(', self._x1, self._x2, ']' if self._right_closed else ')',
            '[' if self._bottom_closed else '(', self._y1, self._y2, ']' if self._top_closed else ')')
