#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_writers
----------------------------------

Tests for `writers` module.
"""

from __future__ import print_function
import json
import unittest

import yaml

from gammastage import stagescan
from gammastage import writers


def report_data(spec, exploratory=False):
    data = {'command': 'report'}
    data.update(stagescan.report(spec, exploratory).as_dict())
    return data


class TestWriters(unittest.TestCase):

    def test_json_keeps_order(self):
        data = report_data(stagescan.bp(3))
        str_file = writers.Json().dump(data)
        self.assertEqual(list(json.loads(str_file)), list(data))
        self.assertEqual(writers.Json().dump(json.loads(str_file)), str_file)

    def test_yaml(self):
        data = report_data(stagescan.e(2, 3))
        str_file = writers.Yaml().dump(data)
        self.assertTrue(str_file.startswith("command: report\n"))
        self.assertEqual(yaml.safe_load(str_file), data)

    def test_text_report(self):
        str_file = writers.Text().dump(report_data(stagescan.bp(3)))
        lines = str_file.splitlines()
        self.assertEqual(lines[0], "BP at p=3 (PolynomialWithKochmanTorsion cooperations)")
        self.assertIn("  BP admits at least a 22-stage structure", lines)
        self.assertIn("  an extension of a 3-stage structure is unique up to the 5-stage", lines)
        self.assertIn("P(1,2) in degree 21", str_file)

    def test_text_report_flat(self):
        str_file = writers.Text().dump(report_data(stagescan.e(1, 5)))
        self.assertIn("E(1) admits at least a 9-stage structure", str_file)
        self.assertIn("much too weak", str_file)

    def test_text_exploratory(self):
        str_file = writers.Text().dump(report_data(stagescan.bp(2), exploratory=True))
        self.assertIn("exploratory windows:", str_file)

    def test_text_stage(self):
        data = {'command': 'stage'}
        data.update(stagescan.describe_stage(4).as_dict())
        str_file = writers.Text().dump(data)
        self.assertIn("HΓ^4,-2", str_file)
        self.assertIn("must vanish on the way from a 3-stage: HΓ^3,-1", str_file)

    def test_article(self):
        self.assertEqual(writers._article(8), "an")
        self.assertEqual(writers._article(11), "an")
        self.assertEqual(writers._article(18), "an")
        self.assertEqual(writers._article(80), "an")
        self.assertEqual(writers._article(10), "a")
        self.assertEqual(writers._article(22), "a")
        self.assertEqual(writers._article(110), "a")


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
