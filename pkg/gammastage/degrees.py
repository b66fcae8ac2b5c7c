# -*- coding: utf-8 -*-
"""Integer degree sets.

All coefficient rings and cooperation algebras that the stage scanner looks at
are concentrated in degrees of the form

    d = sum_j c_j * g_j

for finitely or infinitely many generator degrees ``g_j`` (typically
``2p^j - 2``), with ``c_j >= 0``, or ``c_j`` any integer when the generator is
invertible (like ``v_i`` in a Johnson-Wilson theory). A :class:`DegreeSet`
answers membership, minimum and listing questions about such a set exactly.

:example:

>>> from gammastage import degrees
>>> s = degrees.bp(3)
>>> s.contains(6), s.min_positive(), s.enumerate_up_to(17)
(False, 4, [0, 4, 8, 12, 16])
"""

from __future__ import print_function
from functools import reduce
from math import gcd
import heapq
import logging
import threading

from sympy import isprime

from gammastage.errors import NoPositiveElement

log = logging.getLogger(__name__)

# generators are first materialized up to this degree
_MIN_BOUND = 64


class DegreeGenerator(object):
    """A single generator degree.

    :param int value: the degree, never zero
    :param bool invertible: if True the coefficient may be any integer
    :param str label: a name for the element sitting in this degree, e.g. "v2"

    **Members:**
    """

    def __init__(self, value, invertible=False, label=""):
        if value == 0:
            raise ValueError("a generator degree must be non-zero")

        self.value = value
        """The degree of the generator"""

        self.invertible = bool(invertible)
        """Whether negative multiples are allowed"""

        self.label = label
        """Name of the element in this degree (for witnesses)"""

    def __eq__(self, other):
        if not isinstance(other, DegreeGenerator):
            return NotImplemented
        return (self.value, self.invertible) == (other.value, other.invertible)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.value, self.invertible))

    def __repr__(self):
        inv = " (invertible)" if self.invertible else ""
        return "<gammastage.degrees.DegreeGenerator %d%s>" % (self.value, inv)

    def __str__(self):
        text = self.label or str(self.value)
        if self.invertible:
            text += "^±1"
        return text


class GeneratorFamily(object):
    """The degrees ``2p^i - offset`` for ``min_index <= i <= max_index``.

    ``offset=2`` gives the polynomial generators ``v_i`` and ``t_i``,
    ``offset=1`` the odd exterior generators (``tau_i``, ``a_i``,
    ``lambda_i``). ``max_index=None`` means the family is infinite; a degree
    set then materializes as many members as its queries need.

    :param int prime: the prime p
    :param int offset: 2 or 1
    :param int min_index: first index i
    :param int max_index: last index, or None
    :param str symbol: element name, members are labelled symbol + index
    """

    def __init__(self, prime, offset=2, min_index=1, max_index=None, symbol=""):
        if offset not in (1, 2):
            raise ValueError("family offset must be 1 or 2, got %r" % offset)
        if min_index < 0 or (offset == 2 and min_index < 1):
            raise ValueError("family index must start at 1 (offset 2) or 0 (offset 1)")
        if max_index is not None and max_index < min_index:
            raise ValueError("family max_index below min_index")

        self.prime = prime
        self.offset = offset
        self.min_index = min_index
        self.max_index = max_index
        self.symbol = symbol

    def __repr__(self):
        return "<gammastage.degrees.GeneratorFamily %s>" % self

    def __str__(self):
        top = "inf" if self.infinite else str(self.max_index)
        name = " (%s)" % self.symbol if self.symbol else ""
        return "2*%d^i-%d%s, %d<=i<=%s" % (self.prime, self.offset, name, self.min_index, top)

    @property
    def infinite(self):
        return self.max_index is None

    def degree(self, i):
        """Degree of the member with index ``i``."""
        return 2 * self.prime ** i - self.offset

    def members_up_to(self, bound):
        """Yield the members of degree at most ``bound`` as generators."""
        i = self.min_index
        while self.max_index is None or i <= self.max_index:
            value = self.degree(i)
            if value > bound:
                break
            yield DegreeGenerator(value, label="%s%d" % (self.symbol, i) if self.symbol else "")
            i += 1

    def gcd(self):
        """gcd of all members.

        For ``a*p^i - c`` every later member is ``p`` times the previous one
        plus ``c(p-1)``, so the first two members already fix the gcd.
        """
        first = [self.degree(self.min_index)]
        if self.max_index is None or self.max_index > self.min_index:
            first.append(self.degree(self.min_index + 1))
        return reduce(gcd, first, 0)


class DegreeSet(object):
    """The set of all sums of generator degrees.

    :param generators: explicit :class:`DegreeGenerator` objects
    :param families: :class:`GeneratorFamily` objects
    :param str name: a name for reports, e.g. "BP_*BP"

    Membership is decided from the Apéry set of each sign, computed once
    and guarded by a lock so one set can be shared between threads; the
    cost of a query does not depend on the size of the degree.

    **Members:**
    """

    def __init__(self, generators=(), families=(), name=""):
        self.generators = list(generators)
        """Explicit generators"""

        self.families = list(families)
        """Generator families (possibly infinite)"""

        self.name = name
        """Name of the graded object this set supports"""

        self._lock = threading.Lock()
        self._apery_sets = {1: None, -1: None}

    def __repr__(self):
        return "<gammastage.degrees.DegreeSet \"%s\" (%s)>" % (self.name, self.describe())

    def __contains__(self, d):
        return self.contains(d)

    def describe(self):
        """Short human readable list of the generators."""
        parts = [str(g) if not g.label else "%s=%s" % (g, g.value) for g in self.generators]
        parts += ["[%s]" % f for f in self.families]
        return ", ".join(parts) if parts else "no generators"

    def extended(self, generators=(), families=(), name=None):
        """A new set generated by these generators and some more."""
        return DegreeSet(self.generators + list(generators),
                         self.families + list(families),
                         name=self.name if name is None else name)

    @property
    def empty(self):
        return not self.generators and not self.families

    def _has_positive(self):
        return bool(self.families) or any(g.value > 0 or g.invertible for g in self.generators)

    def _has_negative(self):
        return any(g.value < 0 or g.invertible for g in self.generators)

    def is_group(self):
        """True if the set contains generators of both signs.

        A monoid generated by ``a > 0`` and ``-b < 0`` is the whole subgroup
        ``gcd(a, b) * Z``, so membership then reduces to divisibility.
        """
        return self._has_positive() and self._has_negative()

    def gcd(self):
        """gcd of all generator degrees (0 for an empty set)."""
        g = reduce(gcd, (abs(x.value) for x in self.generators), 0)
        for family in self.families:
            g = gcd(g, family.gcd())
        return g

    def generators_up_to(self, bound, sign=1):
        """Materialized generators of the given sign with ``|degree| <= bound``.

        Invertible generators are listed for both signs.
        """
        found = []
        for g in self.generators:
            if g.invertible or (g.value > 0) == (sign > 0):
                if abs(g.value) <= bound:
                    found.append(g)
        if sign > 0:
            for family in self.families:
                found.extend(family.members_up_to(bound))
        return sorted(found, key=lambda g: (abs(g.value), g.label))

    def _apery(self, sign):
        """Apéry set of the monoid of members of sign ``sign``.

        Returns ``(m, w)`` where ``m`` is the smallest generator of that sign
        and ``w[r]`` the least member congruent to ``r`` mod ``m`` (None if
        there is none). Generators are materialized until their gcd is the
        gcd of the whole set and every later one exceeds ``max(w)``; such
        generators cannot lower any entry.
        """
        with self._lock:
            cached = self._apery_sets[sign]
            if cached is not None:
                return cached

            target = self.gcd()
            bound = _MIN_BOUND
            while True:
                values = sorted(set(abs(g.value) for g in self.generators_up_to(bound, sign)))
                if values:
                    m = values[0]
                    w = _shortest_residues(m, values)
                    top = max(x for x in w if x is not None)
                    if reduce(gcd, values, 0) == target and top <= bound:
                        break
                bound *= 2
            log.debug("Apéry set of %s (sign %+d) modulo %d from %d generators up to %d",
                      self.name or "unnamed set", sign, m, len(values), bound)
            self._apery_sets[sign] = (m, w)
            return m, w

    def contains(self, d):
        """Is ``d`` a sum of generator degrees?

        :param int d: any integer degree
        :rtype: bool
        """
        if d == 0:
            return True
        if self.is_group():
            return d % self.gcd() == 0

        sign = 1 if d > 0 else -1
        if sign > 0 and not self._has_positive():
            return False
        if sign < 0 and not self._has_negative():
            return False
        m, w = self._apery(sign)
        least = w[abs(d) % m]
        return least is not None and abs(d) >= least

    def min_positive(self):
        """The least positive member.

        :raises NoPositiveElement: if the set has no generators, or none that
                                   can produce a positive degree
        """
        if self.empty:
            raise NoPositiveElement("degree set %s has no generators" % (self.name or ""))
        if self.is_group():
            return self.gcd()
        if not self._has_positive():
            raise NoPositiveElement("degree set %s has only negative generators" % (self.name or ""))

        # the smallest positive sum is the smallest positive generator
        candidates = [g.value for g in self.generators if g.value > 0]
        candidates += [f.degree(f.min_index) for f in self.families]
        return min(candidates)

    def enumerate_up_to(self, bound):
        """All members ``0 <= d <= bound`` in increasing order."""
        if bound < 0:
            raise ValueError("bound must be non-negative")
        if self.is_group():
            step = self.gcd()
            return list(range(0, bound + 1, step))
        if not self._has_positive():
            return [0]
        return [d for d in range(bound + 1) if self.contains(d)]

    def decompose(self, d):
        """A witness for ``d`` using as few non-invertible generators as possible.

        :returns: list of ``(DegreeGenerator, coefficient)`` pairs, or None if
                  ``d`` is not a sum of non-invertible generators of its sign
        """
        if d == 0:
            return []
        sign = 1 if d > 0 else -1
        target = abs(d)
        pieces = [g for g in self.generators_up_to(target, sign) if not g.invertible]
        if not pieces:
            return None

        # coin change, fewest summands
        best = [0] + [None] * target
        choice = [None] * (target + 1)
        for x in range(1, target + 1):
            for g in pieces:
                v = abs(g.value)
                if v <= x and best[x - v] is not None:
                    if best[x] is None or best[x - v] + 1 < best[x]:
                        best[x] = best[x - v] + 1
                        choice[x] = g
        if best[target] is None:
            return None

        counts = {}
        x = target
        while x > 0:
            g = choice[x]
            counts[g] = counts.get(g, 0) + 1
            x -= abs(g.value)
        return sorted(counts.items(), key=lambda item: abs(item[0].value))


def _shortest_residues(m, values):
    """Least sum of ``values`` in each residue class mod ``m`` (Dijkstra)."""
    w = [None] * m
    w[0] = 0
    heap = [(0, 0)]
    while heap:
        dist, r = heapq.heappop(heap)
        if dist > w[r]:
            continue
        for v in values:
            s = (r + v) % m
            if w[s] is None or dist + v < w[s]:
                w[s] = dist + v
                heapq.heappush(heap, (dist + v, s))
    return w


def format_decomposition(pieces):
    """Render a decomposition as e.g. ``"1*t1 + 1*t2"``."""
    if pieces is None:
        return "not a sum of non-invertible generators"
    if not pieces:
        return "0"
    return " + ".join("%d*%s" % (count, g.label or g.value) for g, count in pieces)


def _check_prime(p):
    if not isprime(p):
        raise ValueError("%r is not a prime" % (p,))


def _v(p, i, invertible=False):
    return DegreeGenerator(2 * p ** i - 2, invertible=invertible, label="v%d" % i)


def bp(p, cooperations=True):
    """Degrees of BP_* = Z_(p)[v_1, v_2, ...] or of BP_*BP = BP_*[t_1, t_2, ...].

    :param int p: prime
    :param bool cooperations: return the support of BP_*BP instead of BP_*
    """
    _check_prime(p)
    coefficients = DegreeSet(families=[GeneratorFamily(p, 2, 1, symbol="v")], name="BP_*")
    if not cooperations:
        return coefficients
    return coefficients.extended(families=[GeneratorFamily(p, 2, 1, symbol="t")], name="BP_*BP")


def _johnson_wilson(i, p, cooperations, name):
    _check_prime(p)
    if i < 1:
        raise ValueError("Johnson-Wilson index must be at least 1")
    gens = [_v(p, j) for j in range(1, i)] + [_v(p, i, invertible=True)]
    coefficients = DegreeSet(gens, name="%s_*" % name)
    if not cooperations:
        return coefficients
    return coefficients.extended(families=[GeneratorFamily(p, 2, 1, symbol="t")],
                                 name="%s_*%s" % (name, name))


def e(i, p, cooperations=True):
    """Degrees of E(i)_* = Z_(p)[v_1, ..., v_{i-1}, v_i^{±1}] or of E(i)_*E(i)."""
    return _johnson_wilson(i, p, cooperations, "E(%d)" % i)


def e_localized(i, p, cooperations=True):
    """Degrees for the localized Johnson-Wilson theory.

    Units have the form ``s v_i^j + r``, so the coefficient degrees are those
    of E(i)_*: nonnegative multiples of |v_j| for j < i and any multiple of
    |v_i|.
    """
    return _johnson_wilson(i, p, cooperations, "LE(%d)" % i)


def k(n, p, cooperations=True):
    """Degrees of K(n)_* = F_p[v_n^{±1}] or of K(n)_*K(n).

    The cooperations add the etale part (degrees of the t_i) and the exterior
    generators tau_0, ..., tau_{n-1} in degrees 2p^i - 1.
    """
    _check_prime(p)
    if n < 1:
        raise ValueError("Morava K-theory height must be at least 1")
    coefficients = DegreeSet([_v(p, n, invertible=True)], name="K(%d)_*" % n)
    if not cooperations:
        return coefficients
    return coefficients.extended(
        families=[GeneratorFamily(p, 2, 1, symbol="t"),
                  GeneratorFamily(p, 1, 0, n - 1, symbol="tau")],
        name="K(%d)_*K(%d)" % (n, n))


def p_n(n, p, cooperations=True):
    """Degrees of P(n)_* = F_p[v_n, v_{n+1}, ...] or of P(n)_*P(n).

    The cooperations are P(n)_* (x) BP_*BP (x) Lambda(a_0, ..., a_{n-1}) with
    |a_i| = 2p^i - 1.
    """
    _check_prime(p)
    if n < 1:
        raise ValueError("P(n) needs n >= 1")
    coefficients = DegreeSet(families=[GeneratorFamily(p, 2, n, symbol="v")], name="P(%d)_*" % n)
    if not cooperations:
        return coefficients
    return coefficients.extended(
        families=[GeneratorFamily(p, 2, 1, symbol="t"),
                  GeneratorFamily(p, 1, 0, n - 1, symbol="a")],
        name="P(%d)_*P(%d)" % (n, n))


def thh_bp(p, cooperations=True):
    """Degrees of THH(BP)_* = BP_* (x) Lambda(lambda_1, lambda_2, ...), |lambda_i| = 2p^i - 1."""
    _check_prime(p)
    coefficients = DegreeSet(families=[GeneratorFamily(p, 2, 1, symbol="v"),
                                       GeneratorFamily(p, 1, 1, symbol="lambda")],
                             name="THH(BP)_*")
    if not cooperations:
        return coefficients
    return coefficients.extended(families=[GeneratorFamily(p, 2, 1, symbol="t")],
                                 name="THH(BP)_*THH(BP)")
