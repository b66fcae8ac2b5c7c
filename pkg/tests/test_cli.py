#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_cli
----------------------------------

Tests for `cli` module.
"""

from __future__ import print_function
from contextlib import redirect_stderr
import io
import json
import time
import unittest

import yaml

from gammastage import cli, stagescan


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stderr(err):
        code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestReport(unittest.TestCase):

    def test_bp_json(self):
        code, out, _ = run('report', '--spectrum', 'bp', '--prime', '3', '--format', 'json')
        self.assertEqual(code, 0)
        self.assertIn('"refined_bound": 22', out)
        data = json.loads(out)
        self.assertEqual(data['command'], 'report')
        self.assertEqual((data['degree_count_bound'], data['uniqueness_bound']), (6, 5))

    def test_json_is_stable(self):
        argv = ('report', '--spectrum', 'e', '--index', '2', '--prime', '5', '--format', 'json')
        _, first, _ = run(*argv)
        _, second, _ = run(*argv)
        self.assertEqual(first, second)
        self.assertEqual(json.dumps(json.loads(first), indent=2, ensure_ascii=False) + "\n", first)

    def test_input_file(self):
        code, out, _ = run('report', '--input', 'tests/data/bp2.json', '--format', 'yaml')
        self.assertEqual(code, 0)
        self.assertEqual(yaml.safe_load(out)['refined_bound'], 10)

    def test_text(self):
        code, out, _ = run('report', '--spectrum', 'kn', '--index', '2', '--prime', '3')
        self.assertEqual(code, 0)
        self.assertIn("K(2) admits at least a 3-stage structure", out)

    def test_no_three_stage(self):
        code, out, err = run('report', '--spectrum', 'kn', '--prime', '2')
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("homotopy commutative", err)

    def test_undecodable_input(self):
        code, out, err = run('report', '--input', 'tests/data/bad.json')
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("error: "))

    def test_invariant_error(self):
        code, _, err = run('report', '--input', 'tests/data/kochman_odd.json')
        self.assertEqual(code, 1)
        self.assertTrue(err.startswith("error: "))


class TestSpeed(unittest.TestCase):

    def test_every_preset_and_prime(self):
        for name in sorted(stagescan.PRESETS):
            for p in (2, 3, 5, 7, 11, 13):
                start = time.perf_counter()
                code, _, _ = run('report', '--spectrum', name, '--prime', str(p), '--format', 'json')
                self.assertLess(time.perf_counter() - start, 5.0, (name, p))
                self.assertIn(code, (0, 1), (name, p))


class TestUsage(unittest.TestCase):

    def test_usage_errors(self):
        for argv in (
                (),
                ('frobnicate',),
                ('report', '--spectrum', 'bp', '--prime', '4'),
                ('report', '--spectrum', 'bp'),
                ('report',),
                ('report', '--spectrum', 'bp', '--prime', '2', '--input', 'tests/data/bp2.json'),
                ('trees', '--n', '0'),
                ('stage', '--n', '1'),
                ('kochman', '--prime', '3', '--format', 'xml'),
        ):
            code, out, _ = run(*argv)
            self.assertEqual(code, 2, argv)
            self.assertEqual(out, "")


class TestCommands(unittest.TestCase):

    def test_trees(self):
        code, out, _ = run('trees', '--n', '3')
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[:2], ["0 internal edges: 1 shape", "  0(1,2,3)"])
        self.assertIn("1 internal edge: 3 shapes", lines)
        self.assertIn("  H_1 = Z^2", lines)

    def test_trees_too_big(self):
        code, _, err = run('trees', '--n', '8')
        self.assertEqual(code, 1)
        self.assertIn("error:", err)

    def test_lie(self):
        code, out, _ = run('lie', '--n', '3', '--format', 'json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['basis'], ["[[x1,x2],x3]", "[[x1,x3],x2]"])

    def test_kochman(self):
        code, out, _ = run('kochman', '--prime', '2', '--max-degree', '9', '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data['min_odd_degree'], 9)
        self.assertEqual(data['degrees']['9'][0], "P(1,2)")

    def test_dl_chain(self):
        code, out, _ = run('dl', '--prime', '3', '--format', 'json')
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['stage'], 22)
        self.assertEqual(data['window']['max_i'], 6)
        self.assertEqual(data['chain']['target'], "a_14")

    def test_dl_class_degree(self):
        code, out, _ = run('dl', '--prime', '2', '--stage', '4', '--class-degree', '2')
        self.assertEqual(code, 0)
        self.assertIn("  Q^4 = Q_2, lands in degree 6", out)

    def test_dl_stage_too_low(self):
        code, _, err = run('dl', '--prime', '5', '--stage', '5')
        self.assertEqual(code, 1)
        self.assertIn("stage must exceed p", err)

    def test_degrees(self):
        code, out, _ = run('degrees', '--spectrum', 'bp', '--prime', '3', '--max-degree', '12',
                           '--format', 'json')
        data = json.loads(out)
        self.assertEqual(data['cooperations']['members'], [0, 4, 8, 12])
        self.assertEqual(data['coefficients']['min_positive'], 4)

    def test_stage(self):
        code, out, _ = run('stage', '--n', '3')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("3-stage structure: "))


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
