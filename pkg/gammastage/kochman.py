# -*- coding: utf-8 -*-
"""Kochman's additive basis of the p-torsion in the integral dual Steenrod
algebra.

The p-torsion of (HZ_(p))_*HZ is a sum of copies of Z/p, one for each basis
element

    P(n_1, ..., n_t) * zeta_1^e_1 * ... * zeta_s^e_s

with ``t >= 0``, ``t != 1``, ``0 < n_1 < ... < n_t``, ``e_i = 0`` for
``i < n_1`` and ``t + sum(e_i) > 0``. The degree of ``P(n_1, ..., n_t)`` is
``2(p^n_1 + ... + p^n_t) - t - 1`` (``P()`` has degree 0) and the degree of
``zeta_i`` is ``2p^i - 2``.

Generators are written as strings like ``P(1,2)*z1^1``; the t = 0 ones
without the P-part (``z1^2*z2^1``) and the unit as ``P()``.
"""

from __future__ import print_function
from functools import lru_cache
import logging
import re

from gammastage import degrees
from gammastage.errors import InvalidGenerator

log = logging.getLogger(__name__)

_P_PART = re.compile(r"^P\(([0-9,\s]*)\)$")
_Z_PART = re.compile(r"^z([0-9]+)(?:\^([0-9]+))?$")


class KochmanGenerator(object):
    """One basis element.

    :param n_list: the P-slots ``n_1 < ... < n_t``
    :param dict exponents: sparse map index i -> exponent of zeta_i
    :param int t: number of P-slots; defaults to ``len(n_list)``. Passing it
                  separately lets raw (possibly inconsistent) data be checked.

    **Members:**
    """

    def __init__(self, n_list=(), exponents=None, t=None):
        self.n_list = tuple(n_list)
        """The indices inside P(...)"""

        self.t = len(self.n_list) if t is None else t
        """Number of P-slots"""

        self.exponents = dict((i, e) for i, e in (exponents or {}).items() if e != 0)
        """Sparse exponents of the conjugate Milnor generators zeta_i"""

    def __eq__(self, other):
        if not isinstance(other, KochmanGenerator):
            return NotImplemented
        return (self.t, self.n_list, sorted(self.exponents.items())) == \
            (other.t, other.n_list, sorted(other.exponents.items()))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.t, self.n_list, tuple(sorted(self.exponents.items()))))

    def __repr__(self):
        return "<gammastage.kochman.KochmanGenerator \"%s\">" % self

    def __str__(self):
        parts = []
        if self.t > 0 or not self.exponents:
            parts.append("P(%s)" % ",".join(str(n) for n in self.n_list))
        for i in sorted(self.exponents):
            parts.append("z%d^%d" % (i, self.exponents[i]))
        return "*".join(parts)

    @classmethod
    def parse(cls, text):
        """Read the canonical string form back.

        :raises InvalidGenerator: if the text is not a product of a P-part and
                                  zeta powers
        """
        n_list = ()
        exponents = {}
        for i, part in enumerate(p.strip() for p in text.strip().split("*")):
            match = _P_PART.match(part)
            if match and i == 0:
                body = match.group(1).strip()
                try:
                    n_list = tuple(int(n) for n in body.split(",")) if body else ()
                except ValueError:
                    raise InvalidGenerator("cannot read %r as a Kochman generator" % text)
                continue
            match = _Z_PART.match(part)
            if not match:
                raise InvalidGenerator("cannot read %r as a Kochman generator" % text)
            index = int(match.group(1))
            exponents[index] = exponents.get(index, 0) + int(match.group(2) or 1)
        return cls(n_list, exponents)

    def _violation(self, allow_unit=False):
        """The first violated basis condition, or None."""
        if self.t < 0 or self.t == 1:
            return "t must be 0 or at least 2 (got t=%d)" % self.t
        if len(self.n_list) != self.t:
            return "P(...) has %d slots but t=%d" % (len(self.n_list), self.t)
        if any(n <= 0 for n in self.n_list):
            return "P-slots must be positive"
        if any(a >= b for a, b in zip(self.n_list, self.n_list[1:])):
            return "P-slots must be strictly increasing"
        if any(i <= 0 for i in self.exponents):
            return "zeta indices start at 1"
        if any(e < 0 for e in self.exponents.values()):
            return "exponents must be non-negative"
        if self.t > 0 and any(i < self.n_list[0] for i in self.exponents):
            return "e_i must vanish for i < n_1=%d" % self.n_list[0]
        if not allow_unit and self.t + sum(self.exponents.values()) == 0:
            return "t + sum(e_i) must be positive (P() is the unit)"
        return None

    def is_admissible(self):
        """True iff the data satisfies every basis condition."""
        return self._violation() is None

    def is_unit(self):
        return self.t == 0 and not self.exponents

    def degree(self, p):
        """Internal degree of the element at the prime ``p``.

        The unit ``P()`` is accepted and has degree 0.

        :raises InvalidGenerator: if a basis condition fails
        """
        problem = self._violation(allow_unit=True)
        if problem:
            raise InvalidGenerator("%s: %s" % (self, problem))
        return p_part_degree(p, self.n_list) + \
            sum(e * (2 * p ** i - 2) for i, e in self.exponents.items())

    def dense_exponents(self, length):
        """Exponents as a tuple ``(e_1, ..., e_length)``."""
        return tuple(self.exponents.get(i, 0) for i in range(1, length + 1))


def p_part_degree(p, n_list):
    """Degree of P(n_list): 2*sum(p^n) - t - 1, zero for the empty list."""
    if not n_list:
        return 0
    return 2 * sum(p ** n for n in n_list) - len(n_list) - 1


def _top_zeta_index(p, d_max):
    k = 0
    while 2 * p ** (k + 1) - 2 <= d_max:
        k += 1
    return k


def _p_parts(p, d_max):
    """All admissible P-parts (t = 0 or t >= 2) of degree <= d_max."""
    found = [()]

    def extend(prefix, total):
        start = prefix[-1] + 1 if prefix else 1
        n = start
        while True:
            candidate = prefix + (n,)
            s = total + 2 * p ** n
            # degree only grows when slots are added or raised
            if s - len(candidate) - 1 > d_max:
                return
            if len(candidate) >= 2:
                found.append(candidate)
            extend(candidate, s)
            n += 1

    extend((), 0)
    return found


def _exponent_vectors(p, first, budget):
    """Yield sparse exponent dicts over indices >= first with degree <= budget."""
    indices = []
    i = first
    while 2 * p ** i - 2 <= budget:
        indices.append(i)
        i += 1

    def walk(pos, remaining, current):
        if pos == len(indices):
            yield dict(current)
            return
        step = 2 * p ** indices[pos] - 2
        e = 0
        while e * step <= remaining:
            if e:
                current[indices[pos]] = e
            for found in walk(pos + 1, remaining - e * step, current):
                yield found
            e += 1
        current.pop(indices[pos], None)

    return walk(0, budget, {})


def enumerate_by_degree(p, d_max):
    """Every admissible basis element of degree at most ``d_max``.

    :returns: dict degree -> list of :class:`KochmanGenerator`, each list
              ordered by ``(t, n_list, exponents)`` with the exponents read
              as a dense tuple. The unit is not included.
    """
    if d_max < 0:
        raise ValueError("d_max must be non-negative")

    width = _top_zeta_index(p, d_max)
    table = {}
    for n_list in _p_parts(p, d_max):
        base = p_part_degree(p, n_list)
        first = n_list[0] if n_list else 1
        for exponents in _exponent_vectors(p, first, d_max - base):
            g = KochmanGenerator(n_list, exponents)
            if g.is_unit():
                continue
            table.setdefault(g.degree(p), []).append(g)

    for entries in table.values():
        entries.sort(key=lambda g: (g.t, g.n_list, g.dense_exponents(width)))
    log.debug("kochman basis at p=%d up to degree %d: %d elements in %d degrees",
              p, d_max, sum(len(v) for v in table.values()), len(table))
    return table


@lru_cache(maxsize=None)
def _zeta_monoid(p, first):
    return degrees.DegreeSet(families=[degrees.GeneratorFamily(p, 2, first, symbol="z")],
                             name="zeta_i, i>=%d" % first)


def degrees_up_to(p, d_max):
    """The set of positive degrees <= d_max carrying a basis element.

    Computed from the P-part degrees and the zeta degree monoids, without
    listing the basis itself.
    """
    found = set()
    for n_list in _p_parts(p, d_max):
        base = p_part_degree(p, n_list)
        monoid = _zeta_monoid(p, n_list[0] if n_list else 1)
        for m in monoid.enumerate_up_to(d_max - base):
            if base + m > 0:
                found.add(base + m)
    return found


def first_generator_of_degree(p, d):
    """The first basis element of degree ``d`` in enumeration order, or None."""
    entries = enumerate_by_degree(p, d).get(d)
    return entries[0] if entries else None


def min_odd_degree(p):
    """Least odd degree of a basis element (2p^2 + 2p - 3)."""
    d_max = 64
    while True:
        odd = [d for d in degrees_up_to(p, d_max) if d % 2]
        if odd:
            return min(odd)
        d_max *= 2


def is_t0_degree(p, d):
    """True iff ``d`` is the degree of some t = 0 basis element."""
    return d > 0 and _zeta_monoid(p, 1).contains(d)
