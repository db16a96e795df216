# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'


class CheckResult(object):
    """
    The outcome of a check or an experiment: a verdict plus the errors,
    warnings and messages collected while producing it.
    """

    def __init__(self, name=None, n=None, q=None):
        self._name = name
        self._n = n
        self._q = q
        self._messages = None
        self._warnings = None
        self._errors = None
        self._good = False
        self._skipped = False

    @property
    def name(self):
        return self._name

    @property
    def n(self):
        return self._n

    @property
    def q(self):
        return self._q

    @property
    def messages(self):
        """
        A list of informational topics, such as the largest observed error
        """
        return self._messages

    @property
    def warnings(self):
        """
        A list of findings that do not make the result bad
        """
        return self._warnings

    @property
    def errors(self):
        """
        A list of violated identities or failed thresholds
        """
        return self._errors

    @property
    def good(self):
        """
        A boolean that indicates whether every assertion held
        """
        return self._good

    @property
    def skipped(self):
        return self._skipped

    @property
    def status(self):
        if self._skipped:
            return SKIPPED
        return PASS if self._good else FAIL

    @property
    def errors_warnings_and_messages_as_string(self):
        lines = (self._errors or []) + (self._warnings or []) + (self._messages or [])
        if not lines:
            return None
        return '\n'.join(lines)

    def add_message(self, message):
        if message is not None:
            if self._messages is None:
                self._messages = []
            self._messages.append(message)

    def add_warning(self, warning):
        if warning is None:
            return

        if self._warnings is None:
            self._warnings = []
        self._warnings.append(warning)

    def add_error(self, error):
        if error is None:
            return

        if self._errors is None:
            self._errors = []
        self._errors.append(error)
        self._good = False

    def mark_as_good(self):
        self._good = not self._errors

    def mark_as_bad(self):
        self._good = False

    def mark_as_skipped(self, reason=None):
        self._skipped = True
        self._good = True
        self.add_message(reason)

    def to_row(self):
        return {
            'check': self._name,
            'n': '' if self._n is None else self._n,
            'q': '' if self._q is None else '%.17g' % self._q,
            'status': self.status,
            'detail': ' | '.join((self._errors or []) + (self._warnings or []) + (self._messages or [])),
        }

    def __str__(self):
        return self.errors_warnings_and_messages_as_string or ''
