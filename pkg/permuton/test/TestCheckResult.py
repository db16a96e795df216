# Copyright (c) 2026 The permuton developers
# Released under the MIT License. See LICENSE.txt for details.

import unittest

from permuton import CheckResult
from permuton.Check import Check
from permuton.CheckResult import FAIL, PASS, SKIPPED


class TestCheckResult(unittest.TestCase):
    """Asserts that the properties and methods of the CheckResult class behave correctly."""

    def setUp(self):
        self.result = CheckResult('restriction', 4, 0.8)

    def tearDown(self):
        pass

    def test_adding_none_to_messages_does_not_create_a_message(self):
        self.result.add_message(None)
        self.result.add_warning("warning")
        self.result.add_error("error")
        self.assertIsNone(self.result.messages, "Expected adding a None message to not add an item to messages")

    def test_adding_none_to_warnings_does_not_create_a_warning(self):
        self.result.add_message("message")
        self.result.add_warning(None)
        self.result.add_error("error")
        self.assertIsNone(self.result.warnings, "Expected adding a None warning to not add an item to warnings")

    def test_adding_none_to_error_does_not_create_a_message(self):
        self.result.add_message("message")
        self.result.add_warning("warning")
        self.result.add_error(None)
        self.assertIsNone(self.result.errors, "Expected adding a None error to not add an item to errors")

    def test_errors_warnings_and_messages_as_string_with_one_of_each(self):
        self.result.add_message("message")
        self.result.add_warning("warning")
        self.result.add_error("error")
        self.assertEqual("error\nwarning\nmessage", self.result.errors_warnings_and_messages_as_string)

    def test_errors_warnings_and_messages_as_string_with_message_and_warning(self):
        self.result.add_message("message")
        self.result.add_warning("warning")
        self.assertEqual("warning\nmessage", self.result.errors_warnings_and_messages_as_string)

    def test_new_result_is_not_good(self):
        self.assertFalse(self.result.good)
        self.assertEqual(FAIL, self.result.status)

    def test_mark_as_good_respects_errors(self):
        self.result.mark_as_good()
        self.assertEqual(PASS, self.result.status)
        self.result.add_error("error")
        self.assertFalse(self.result.good)
        self.result.mark_as_good()
        self.assertFalse(self.result.good)

    def test_warnings_do_not_make_a_result_bad(self):
        self.result.add_warning("warning")
        self.result.mark_as_good()
        self.assertTrue(self.result.good)

    def test_skipped_result(self):
        self.result.mark_as_skipped("nothing to check")
        self.assertTrue(self.result.good)
        self.assertEqual(SKIPPED, self.result.status)
        self.assertEqual(["nothing to check"], self.result.messages)

    def test_to_row(self):
        self.result.add_message("message")
        self.result.add_error("error")
        self.assertEqual({'check': 'restriction', 'n': 4, 'q': '0.80000000000000004', 'status': FAIL,
                          'detail': 'error | message'}, self.result.to_row())
        self.assertEqual('', CheckResult('density').to_row()['n'])

    def test_finish_records_one_line_per_outcome(self):
        result = Check.finish(self.result, 0, 24, 'permutations')
        self.assertEqual(PASS, result.status)
        self.assertEqual(['24 permutations hold'], result.messages)

        result = Check.finish(CheckResult('restriction', 4, 0.8), 3, 24, 'permutations')
        self.assertEqual(FAIL, result.status)
        self.assertEqual(['3 of 24 permutations violated'], result.errors)
        self.assertIsNone(result.messages)


if __name__ == '__main__':
    unittest.main()
