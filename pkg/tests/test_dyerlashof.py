#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_dyerlashof
----------------------------------

Tests for `dyerlashof` module.
"""

from __future__ import print_function
import unittest

from hypothesis import given, settings, strategies as st

from gammastage import dyerlashof
from gammastage.dyerlashof import Availability, Status
from gammastage.errors import InstabilityZero, StageTooLow


class TestLowerIndex(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(dyerlashof.max_lower_index(2, 10), 8)
        self.assertEqual(dyerlashof.max_lower_index(3, 6), 3)

    def test_stage_too_low(self):
        with self.assertRaises(StageTooLow):
            dyerlashof.max_lower_index(5, 5)
        with self.assertRaises(StageTooLow):
            dyerlashof.available_upper_ops(3, 2, 4)


class TestRegrade(unittest.TestCase):

    def test_p2(self):
        self.assertEqual(dyerlashof.regrade(2, 4, 2), Availability(Status.AVAILABLE, 2, 6))
        self.assertEqual(dyerlashof.regrade(2, 2, 2), Availability(Status.AVAILABLE, 0, 4))
        self.assertEqual(dyerlashof.regrade(2, 1, 2).status, Status.ZERO_BY_INSTABILITY)

    def test_odd(self):
        self.assertEqual(dyerlashof.regrade(3, 2, 4), Availability(Status.AVAILABLE, 0, 12))
        self.assertEqual(dyerlashof.regrade(3, 3, 4), Availability(Status.AVAILABLE, 4, 16))
        self.assertFalse(dyerlashof.regrade(5, 1, 3).available)

    def test_negative_degree(self):
        with self.assertRaises(ValueError):
            dyerlashof.regrade(2, 1, -1)

    def test_availability_respects_stage(self):
        found = dyerlashof.availability(3, 6, 4, 4)
        self.assertEqual(found.status, Status.NOT_PROVIDED_BY_STAGE)
        self.assertEqual(found.lower_index, 8)
        self.assertTrue(dyerlashof.availability(3, 12, 4, 4).available)


class TestUpperWindow(unittest.TestCase):

    def test_bp_stage_gives_2p(self):
        for p in (3, 5, 7):
            window = dyerlashof.available_upper_ops(p, 2 * p * p + 2 * p - 2, 2 * p - 2)
            self.assertEqual(window.max_i, 2 * p)

    def test_constraints(self):
        for p in (3, 5, 7):
            self.assertEqual(dyerlashof.available_upper_ops(p, 2 * p, 4).constraint, "2i-|x| <= 1")
        self.assertEqual(dyerlashof.available_upper_ops(2, 4, 3).constraint, "i-|x| <= 2")
        self.assertEqual(dyerlashof.available_upper_ops(2, 4, 3).max_i, 5)

    @settings(derandomize=True, max_examples=200)
    @given(st.sampled_from([2, 3, 5]), st.integers(1, 40), st.integers(0, 30))
    def test_matches_search(self, p, extra, x):
        stage = p + extra
        window = dyerlashof.available_upper_ops(p, stage, x)
        found = [i for i in range(0, 200) if dyerlashof.availability(p, stage, i, x).available]
        self.assertEqual(window.max_i, max(found) if found else None)

    def test_monotone_in_stage(self):
        for p in (2, 3, 5):
            for x in (0, 1, 4, 9):
                last = None
                for stage in range(p + 1, p + 40):
                    max_i = dyerlashof.available_upper_ops(p, stage, x).max_i
                    if last is not None:
                        self.assertGreaterEqual(max_i, last)
                    last = max_i if max_i is not None else last

    def test_table(self):
        rows = dyerlashof.operation_table(2, 4, 2)
        self.assertEqual([(r['upper_index'], r['lower_index'], r['target_degree']) for r in rows],
                         [(2, 0, 4), (3, 1, 5), (4, 2, 6)])
        self.assertEqual(dyerlashof.operation_table(3, 4, 5), [])


class TestTargetDegree(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(dyerlashof.target_degree(2, 4, 2), 6)
        for p in (3, 5, 7):
            self.assertEqual(dyerlashof.target_degree(p, 2 * p, 2 * p - 2), 2 * (2 * p + 1) * (p - 1))

    def test_instability(self):
        with self.assertRaises(InstabilityZero):
            dyerlashof.target_degree(2, 1, 2)
        with self.assertRaises(InstabilityZero):
            dyerlashof.target_degree(3, 1, 4)


class TestIndecomposableChain(unittest.TestCase):

    def test_odd_prime(self):
        chain = dyerlashof.indecomposable_chain(3)
        self.assertEqual(chain['stage'], 22)
        self.assertEqual((chain['source'], chain['target']), ("a_2", "a_14"))
        self.assertEqual(chain['target_degree'], 28)
        self.assertEqual(chain['lower_index'], 16)
        self.assertTrue(chain['available'])

    def test_p2(self):
        chain = dyerlashof.indecomposable_chain(2)
        self.assertEqual((chain['source'], chain['target'], chain['stage']), ("a_1", "a_3", 10))
        self.assertTrue(chain['available'])

    def test_low_stage(self):
        chain = dyerlashof.indecomposable_chain(3, 4)
        self.assertFalse(chain['available'])
        self.assertEqual(chain['target_degree'], 28)


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
