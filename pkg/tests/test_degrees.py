#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_degrees
----------------------------------

Tests for `degrees` module.
"""

from __future__ import print_function
from concurrent.futures import ThreadPoolExecutor
import random
import unittest

from hypothesis import given, settings, strategies as st

from gammastage import degrees
from gammastage.errors import NoPositiveElement


def oracle(s, bound):
    """Membership for |d| <= bound by plain dynamic programming.

    Returns a function d -> bool. Invertible generators are handled through
    residues: d is a member iff some member of the non-invertible monoid in
    [0, 3*bound] is congruent to d modulo the invertible part.
    """
    inv = 0
    for g in s.generators:
        if g.invertible:
            inv = abs(g.value) if inv == 0 else _gcd(inv, abs(g.value))
    top = 3 * bound if inv else bound
    values = sorted(set(g.value for g in s.generators if not g.invertible and g.value > 0))
    for family in s.families:
        i = family.min_index
        while (family.max_index is None or i <= family.max_index) and family.degree(i) <= top:
            values.append(family.degree(i))
            i += 1
    reach = bytearray(top + 1)
    reach[0] = 1
    for g in set(values):
        for x in range(g, top + 1):
            if reach[x - g]:
                reach[x] = 1

    if not inv:
        return lambda d: d >= 0 and bool(reach[d])
    residues = [any(reach[r::inv]) for r in range(inv)]
    return lambda d: residues[d % inv]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def presets():
    for p in (2, 3):
        for coop in (False, True):
            yield degrees.bp(p, coop)
            yield degrees.thh_bp(p, coop)
            for i in (1, 2):
                yield degrees.e(i, p, coop)
                yield degrees.e_localized(i, p, coop)
                yield degrees.k(i, p, coop)
                yield degrees.p_n(i, p, coop)


class TestDegreeGenerator(unittest.TestCase):

    def test_zero_rejected(self):
        with self.assertRaises(ValueError):
            degrees.DegreeGenerator(0)

    def test_equality(self):
        self.assertEqual(degrees.DegreeGenerator(6, label="v2"), degrees.DegreeGenerator(6, label="t2"))
        self.assertNotEqual(degrees.DegreeGenerator(6), degrees.DegreeGenerator(6, invertible=True))

    def test_family_members(self):
        v = degrees.GeneratorFamily(2, 2, 1, symbol="v")
        self.assertEqual([g.value for g in v.members_up_to(30)], [2, 6, 14, 30])
        self.assertEqual([g.label for g in v.members_up_to(6)], ["v1", "v2"])
        tau = degrees.GeneratorFamily(3, 1, 0, 1, symbol="tau")
        self.assertEqual([g.value for g in tau.members_up_to(1000)], [1, 5])

    def test_family_gcd(self):
        self.assertEqual(degrees.GeneratorFamily(5, 2, 1).gcd(), 8)
        self.assertEqual(degrees.GeneratorFamily(3, 1, 1).gcd(), 1)

    def test_bad_family(self):
        with self.assertRaises(ValueError):
            degrees.GeneratorFamily(2, 3, 1)
        with self.assertRaises(ValueError):
            degrees.GeneratorFamily(2, 2, 0)


class TestContains(unittest.TestCase):

    def test_zero_always(self):
        for s in presets():
            self.assertTrue(s.contains(0), s)
        self.assertTrue(degrees.DegreeSet().contains(0))

    def test_bp_examples(self):
        self.assertTrue(degrees.bp(2).contains(0))
        self.assertFalse(degrees.bp(3).contains(6))
        self.assertTrue(degrees.bp(3).contains(8))
        self.assertFalse(degrees.bp(3).contains(-4))

    def test_invertible(self):
        s = degrees.e_localized(2, 2, cooperations=False)
        self.assertTrue(s.contains(-6))
        self.assertTrue(s.contains(-2))
        self.assertFalse(s.contains(-3))
        self.assertTrue(s.is_group())

    def test_negative_generators(self):
        s = degrees.DegreeSet([degrees.DegreeGenerator(-4), degrees.DegreeGenerator(-6)])
        self.assertTrue(s.contains(-10))
        self.assertFalse(s.contains(-2))
        self.assertFalse(s.contains(4))

    def test_large_query_extends(self):
        s = degrees.bp(2, cooperations=False)
        self.assertTrue(s.contains(2 ** 20 - 2))
        self.assertFalse(s.contains(2 ** 20 - 1))

    def test_huge_degrees(self):
        self.assertTrue(degrees.bp(2).contains(2 ** 40))
        self.assertFalse(degrees.bp(2).contains(2 ** 40 + 1))
        self.assertTrue(degrees.bp(3).contains(4 * 10 ** 15))
        self.assertFalse(degrees.bp(3).contains(4 * 10 ** 15 + 2))
        s = degrees.DegreeSet([degrees.DegreeGenerator(-4), degrees.DegreeGenerator(-6)])
        self.assertTrue(s.contains(-(2 ** 50)))
        self.assertFalse(s.contains(-(2 ** 50) - 1))

    def test_numerical_semigroup(self):
        # 6, 9, 20: the largest non-member is 43
        s = degrees.DegreeSet([degrees.DegreeGenerator(v) for v in (6, 9, 20)])
        self.assertFalse(s.contains(43))
        self.assertTrue(all(s.contains(d) for d in range(44, 400)))
        self.assertEqual([d for d in range(20) if s.contains(d)], [0, 6, 9, 12, 15, 18])

    def test_oracle_agreement(self):
        bound = 10 ** 4
        for s in presets():
            member = oracle(s, bound)
            for d in range(-bound, bound + 1):
                if s.contains(d) != member(d):
                    self.fail("%r disagrees with the oracle at %d" % (s, d))

    @settings(derandomize=True, max_examples=300)
    @given(st.sampled_from([2, 3, 5]), st.integers(0, 400), st.integers(0, 400))
    def test_closure(self, p, a, b):
        for s in (degrees.bp(p), degrees.k(1, p), degrees.e(2, p, cooperations=False)):
            if s.contains(a) and s.contains(b):
                self.assertTrue(s.contains(a + b))

    def test_closure_every_preset(self):
        rng = random.Random(8191)
        for s in presets():
            members = s.enumerate_up_to(3000)
            group = s.is_group()
            for _ in range(10 ** 4):
                a, b = rng.choice(members), rng.choice(members)
                if group:
                    a, b = a * rng.choice((1, -1)), b * rng.choice((1, -1))
                self.assertTrue(s.contains(a + b), (s, a, b))

    def test_thread_safety(self):
        s = degrees.bp(3)
        queries = list(range(0, 5000, 7))
        expected = [d % 4 == 0 for d in queries]
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(s.contains, queries))
        self.assertEqual(results, expected)


class TestMinPositive(unittest.TestCase):

    def test_bp(self):
        self.assertEqual(degrees.bp(3).min_positive(), 4)

    def test_k_odd(self):
        for p in (3, 5):
            self.assertEqual(degrees.k(2, p).min_positive(), 1)

    def test_even_presets(self):
        for p in (2, 3, 5, 7, 11):
            for s in (degrees.bp(p), degrees.bp(p, False), degrees.e(2, p), degrees.e_localized(1, p),
                      degrees.e_localized(3, p, False)):
                self.assertEqual(s.min_positive(), 2 * (p - 1), s)
                for d in s.enumerate_up_to(200):
                    self.assertEqual(d % (2 * (p - 1)), 0)

    def test_empty(self):
        with self.assertRaises(NoPositiveElement):
            degrees.DegreeSet().min_positive()

    def test_negative_only(self):
        with self.assertRaises(NoPositiveElement):
            degrees.DegreeSet([degrees.DegreeGenerator(-2)]).min_positive()

    def test_invertible_gives_gcd(self):
        s = degrees.DegreeSet([degrees.DegreeGenerator(-6), degrees.DegreeGenerator(4)])
        self.assertEqual(s.min_positive(), 2)


class TestEnumerate(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(degrees.bp(2).enumerate_up_to(8), [0, 2, 4, 6, 8])
        self.assertEqual(degrees.bp(3).enumerate_up_to(17), [0, 4, 8, 12, 16])
        for s in presets():
            self.assertEqual(s.enumerate_up_to(0), [0])

    def test_sorted_and_consistent(self):
        for s in presets():
            members = s.enumerate_up_to(300)
            self.assertEqual(members, sorted(set(members)))
            self.assertEqual(members, [d for d in range(301) if s.contains(d)])

    def test_negative_bound(self):
        with self.assertRaises(ValueError):
            degrees.bp(2).enumerate_up_to(-1)


class TestDecompose(unittest.TestCase):

    def test_witness_sums(self):
        s = degrees.bp(3)
        for d in (4, 16, 20, 56):
            pieces = s.decompose(d)
            self.assertEqual(sum(g.value * c for g, c in pieces), d)

    def test_fewest_pieces(self):
        pieces = degrees.bp(2).decompose(8)
        self.assertEqual(sum(c for _, c in pieces), 2)

    def test_not_representable(self):
        self.assertIsNone(degrees.bp(3).decompose(6))
        self.assertEqual(degrees.bp(3).decompose(0), [])

    def test_format(self):
        self.assertEqual(degrees.format_decomposition([]), "0")
        self.assertIn("tau0", degrees.format_decomposition(degrees.k(1, 3).decompose(1)))


class TestPresets(unittest.TestCase):

    def test_not_prime(self):
        with self.assertRaises(ValueError):
            degrees.bp(4)

    def test_cooperations_contain_coefficients(self):
        for p in (2, 3, 5):
            coeff, coop = degrees.p_n(2, p, False), degrees.p_n(2, p)
            for d in coeff.enumerate_up_to(500):
                self.assertTrue(coop.contains(d))

    def test_gcd(self):
        self.assertEqual(degrees.bp(3).gcd(), 4)
        self.assertEqual(degrees.k(1, 3).gcd(), 1)
        self.assertEqual(degrees.DegreeSet().gcd(), 0)

    def test_names(self):
        self.assertEqual(degrees.bp(2).name, "BP_*BP")
        self.assertEqual(degrees.k(2, 3, False).name, "K(2)_*")


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())
