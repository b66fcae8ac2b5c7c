# -*- coding: utf-8 -*-
"""Obstruction windows and coherence bounds.

An n-stage structure extends to an (n+1)-stage once the Gamma cohomology group
HΓ^{n,2-n} vanishes, and the extension is unique once HΓ^{n,1-n} does. The
obstruction modules are built from Lie(m)*, group rings of Σ_m (both in
internal degree 0) and tensor powers of the cooperations E_*E, so a group can
only be non-zero when the degree shift it needs lies in the degree support of
the cooperations. This module scans those windows.

:example:

>>> from gammastage import stagescan
>>> r = stagescan.report(stagescan.bp(3))
>>> r.degree_count_bound, r.refined_bound, r.uniqueness_bound
(6, 22, 5)
"""

from __future__ import print_function
from enum import Enum
from math import factorial
import logging

from sympy import isprime

from gammastage import degrees, kochman
from gammastage.errors import CeilingReached, InvariantError, NoThreeStage, WrongClass

log = logging.getLogger(__name__)

#: scans for a window give up past this stage
CEILING = 10 ** 6

# coefficient family members are checked against the cooperations up to here
_CONTAINMENT_CHECK = 10 ** 4


class CoopClass(Enum):
    """How the cooperations E_*E sit over E_*.
    """
    FREE = "Free"
    FLAT_COLIMIT_OF_FREE = "FlatColimitOfFree"
    POLYNOMIAL_WITH_KOCHMAN_TORSION = "PolynomialWithKochmanTorsion"


class SpectrumPresentation(object):
    """The degree data of a ring spectrum E at a prime.

    :param str name: e.g. "BP"
    :param int prime: the prime p
    :param DegreeSet coeff_degrees: degree support of E_*
    :param DegreeSet coop_degrees: degree support of E_*E
    :param CoopClass coop_class: model for the cooperations
    :param bool odd_commutativity_ok: E is homotopy commutative at p
    :param bool refinable: a refined bound may be computed
    :param notes: remarks carried into every report

    **Members:**
    """

    def __init__(self, name, prime, coeff_degrees, coop_degrees, coop_class,
                 odd_commutativity_ok=True, refinable=True, notes=()):
        self.name = name
        """Name for reports"""

        self.prime = prime
        """The prime"""

        self.coeff_degrees = coeff_degrees
        """:class:`gammastage.degrees.DegreeSet` of E_*"""

        self.coop_degrees = coop_degrees
        """:class:`gammastage.degrees.DegreeSet` of E_*E"""

        self.coop_class = CoopClass(coop_class)
        """:class:`CoopClass`"""

        self.odd_commutativity_ok = odd_commutativity_ok
        """Whether a 3-stage structure exists"""

        self.refinable = refinable
        """Whether the refined bound is computed"""

        self.notes = list(notes)
        """Spectrum specific remarks"""

    def __repr__(self):
        return "<gammastage.stagescan.SpectrumPresentation \"%s\" p=%d %s>" % (
            self.name, self.prime, self.coop_class.value)

    def validate(self):
        """Check the presentation invariants.

        :raises InvariantError: naming the first violated invariant
        """
        if not isprime(self.prime):
            raise InvariantError("%s: %r is not a prime" % (self.name, self.prime))

        coeff, coop = self.coeff_degrees, self.coop_degrees
        for g in coeff.generators:
            values = (g.value, -g.value) if g.invertible else (g.value,)
            for value in values:
                if not coop.contains(value):
                    raise InvariantError("%s: coefficient degree %d is missing from the cooperations"
                                         % (self.name, value))
        for family in coeff.families:
            first = family.degree(family.min_index)
            for g in family.members_up_to(max(first, _CONTAINMENT_CHECK)):
                if not coop.contains(g.value):
                    raise InvariantError("%s: coefficient degree %d (%s) is missing from the cooperations"
                                         % (self.name, g.value, g))

        if self.coop_class is CoopClass.POLYNOMIAL_WITH_KOCHMAN_TORSION:
            p = self.prime
            for g in coop.generators:
                if g.invertible or not _is_polynomial_degree(p, g.value):
                    raise InvariantError(
                        "%s: the Kochman model needs polynomial generators in degrees 2p^i-2, got %s"
                        % (self.name, "%s (invertible)" % g.value if g.invertible else g.value))
            for family in coop.families:
                if family.offset != 2:
                    raise InvariantError(
                        "%s: the Kochman model needs polynomial generators in degrees 2p^i-2, got %s"
                        % (self.name, family))
        return self

    def requires_three_stage(self):
        if not self.odd_commutativity_ok:
            raise NoThreeStage("%s at p=%d is not homotopy commutative, so no 3-stage structure exists"
                               % (self.name, self.prime))


def _is_polynomial_degree(p, d):
    i = 1
    while 2 * p ** i - 2 <= d:
        if 2 * p ** i - 2 == d:
            return True
        i += 1
    return False


class ModuleShape(object):
    """The obstruction module Σ^{n-1} Lie(m)* ⊗ E_*[Σ_m]^{⊗(n-m+1)} ⊗ E_*E^{⊗m}.
    """

    def __init__(self, n, m):
        self.suspension = n - 1
        self.lie_arity = m
        self.group_ring_copies = n - m + 1
        self.coop_copies = m

    def __str__(self):
        return "Σ^%d Lie(%d)* ⊗ E_*[Σ_%d]^⊗%d ⊗ E_*E^⊗%d" % (
            self.suspension, self.lie_arity, self.lie_arity, self.group_ring_copies, self.coop_copies)

    def as_dict(self):
        return {
            'suspension': self.suspension,
            'lie_arity': self.lie_arity,
            'group_ring_copies': self.group_ring_copies,
            'coop_copies': self.coop_copies,
            'text': str(self),
        }


class StageEntry(object):
    """Arity m part of an n-stage: the (n-m)-skeleton of EΣ_m times T_m."""

    def __init__(self, n, m):
        self.m = m
        self.skeleton_dim = n - m
        self.module_shape = ModuleShape(n, m)
        self.lie_rank = factorial(m - 1)

    def as_dict(self):
        return {
            'm': self.m,
            'skeleton_dim': self.skeleton_dim,
            'lie_rank': self.lie_rank,
            'module_shape': self.module_shape.as_dict(),
        }


_GLOSS = {
    2: "a multiplication μ together with its twist μ∘τ, no relations between them",
    3: "the 1-cell of EΣ_2 gives a homotopy μ ≃ μ∘τ; the three 3-trees give associativity up to homotopy",
}


class StageDescriptor(object):
    """What an n-stage structure consists of and where its obstructions live.

    **Members:**
    """

    def __init__(self, n):
        self.n = n
        """The stage"""

        self.entries = [StageEntry(n, m) for m in range(2, n + 1)]
        """One :class:`StageEntry` per arity m = 2..n"""

        self.existence_bidegree = (n, 2 - n)
        """Where the obstruction to an (n+1)-stage lives"""

        self.uniqueness_bidegree = (n, 1 - n)
        """Where the obstruction to uniqueness lives"""

        self.vanishing_bidegrees = [(l, 2 - l) for l in range(3, n)]
        """Groups that must vanish to build an n-stage from a 3-stage"""

        self.gloss = _GLOSS.get(n, "operations of arity m <= %d defined on the (%d-m)-skeleta" % (n, n))
        """Plain description"""

    def __repr__(self):
        return "<gammastage.stagescan.StageDescriptor n=%d>" % self.n

    def as_dict(self):
        return {
            'n': self.n,
            'gloss': self.gloss,
            'entries': [e.as_dict() for e in self.entries],
            'existence_bidegree': list(self.existence_bidegree),
            'uniqueness_bidegree': list(self.uniqueness_bidegree),
            'vanishing_bidegrees': [list(b) for b in self.vanishing_bidegrees],
        }


def describe_stage(n):
    """The filtration piece of an n-stage structure, arity by arity."""
    if n < 2:
        raise ValueError("stages start at n=2, got %d" % n)
    return StageDescriptor(n)


def _first_stage(test, what):
    n = 3
    while n <= CEILING:
        if test(n):
            return n
        n += 1
    raise CeilingReached("no %s below n=%d" % (what, CEILING))


def degree_count_bound(spec):
    """Least n >= 3 with n - 2 in the cooperation degrees.

    :raises NoThreeStage: if the spectrum is not homotopy commutative
    """
    spec.requires_three_stage()
    n = _first_stage(lambda n: spec.coop_degrees.contains(n - 2), "degree-count window")
    log.debug("%s p=%d: degree count window at n=%d", spec.name, spec.prime, n)
    return n


def ext1_bound_flat(spec):
    """First window when only the Ext^0 and Ext^1 lines contribute.

    :raises WrongClass: unless the cooperations are a flat colimit of free modules
    """
    if spec.coop_class is not CoopClass.FLAT_COLIMIT_OF_FREE:
        raise WrongClass("the Ext^1 bound needs FlatColimitOfFree cooperations, %s has %s"
                         % (spec.name, spec.coop_class.value))
    spec.requires_three_stage()
    coop = spec.coop_degrees
    n = _first_stage(lambda n: coop.contains(n - 2) or coop.contains(n - 1), "Ext^0/Ext^1 window")
    log.debug("%s p=%d: Ext^1 window at n=%d", spec.name, spec.prime, n)
    return n


def refined_bound_kochman(spec):
    """First window using the Kochman torsion of the cooperations.

    Ext^0 vanishes, so a window needs n - 2 in the cooperation degrees and a
    torsion class of homological degree n - 1, which must be an odd basis
    element (t >= 2).

    :returns: (n, :class:`gammastage.kochman.KochmanGenerator`)
    :raises WrongClass: unless the cooperations follow the Kochman model
    """
    if spec.coop_class is not CoopClass.POLYNOMIAL_WITH_KOCHMAN_TORSION:
        raise WrongClass("the refined bound needs PolynomialWithKochmanTorsion cooperations, %s has %s"
                         % (spec.name, spec.coop_class.value))
    spec.requires_three_stage()
    p = spec.prime
    bound = 64
    while bound <= 2 * CEILING:
        for d in sorted(d for d in kochman.degrees_up_to(p, bound) if d % 2):
            n = d + 1
            if n >= 3 and spec.coop_degrees.contains(n - 2):
                witness = [g for g in kochman.enumerate_by_degree(p, d)[d] if g.t >= 2][0]
                log.debug("%s p=%d: Kochman window at n=%d from %s", spec.name, p, n, witness)
                return n, witness
        bound *= 2
    raise CeilingReached("no Kochman window below n=%d" % CEILING)


def uniqueness_bound(spec):
    """Stage up to which a 3-stage structure extends uniquely.

    Kochman model: least n >= 3 with n - 1 a positive t=0 degree lying in the
    cooperations. Free: one below the degree count. Flat: one below the
    Ext^1 bound.
    """
    spec.requires_three_stage()
    if spec.coop_class is CoopClass.POLYNOMIAL_WITH_KOCHMAN_TORSION:
        p = spec.prime
        return _first_stage(
            lambda n: spec.coop_degrees.contains(n - 1) and kochman.is_t0_degree(p, n - 1),
            "uniqueness window")
    if spec.coop_class is CoopClass.FLAT_COLIMIT_OF_FREE:
        return ext1_bound_flat(spec) - 1
    return degree_count_bound(spec) - 1


def exploratory_windows(spec, max_degree=None):
    """Windows below the refined bound allowed by a positive degree shift.

    A class in homological degree n - 1 + s with s > 0 a sum of the
    (2p^k - 2) could also pair with the cooperations; these candidates are
    listed without any claim that they carry obstructions.

    :param int max_degree: largest Kochman degree considered (default: twice
                           the refined window)
    :returns: list of dicts with keys n, kochman_degree, shift
    """
    refined, _ = refined_bound_kochman(spec)
    p = spec.prime
    if max_degree is None:
        max_degree = 2 * refined
    odd = sorted(d for d in kochman.degrees_up_to(p, max_degree) if d % 2)
    windows = []
    for n in range(3, refined):
        if not spec.coop_degrees.contains(n - 2):
            continue
        for d in odd:
            shift = d - (n - 1)
            if kochman.is_t0_degree(p, shift):
                windows.append({'n': n, 'kochman_degree': d, 'shift': shift})
                break
    log.debug("%s p=%d: %d exploratory windows", spec.name, p, len(windows))
    return windows


class CoherenceReport(object):
    """Bounds for one presentation.

    **Members:**
    """

    def __init__(self, spec):
        self.spectrum = spec.name
        self.prime = spec.prime
        self.coop_class = spec.coop_class

        self.degree_count_bound = None
        """Least n with n-2 in the cooperation degrees"""

        self.refined_bound = None
        """Kochman or Ext^1 window, when the class admits one"""

        self.stage_bound = None
        """The guaranteed stage: the refined bound if present, else the degree count"""

        self.uniqueness_bound = None
        """Extensions are unique up to this stage"""

        self.witness = {}
        """The degree equation behind the stage bound"""

        self.notes = []
        """Conventions applied"""

        self.exploratory_windows = None
        """Candidate windows with a positive shift (only when asked for)"""

    def __repr__(self):
        return "<gammastage.stagescan.CoherenceReport \"%s\" p=%d stage %s>" % (
            self.spectrum, self.prime, self.stage_bound)

    def as_dict(self):
        """Plain data with a fixed key order."""
        d = {
            'spectrum': self.spectrum,
            'prime': self.prime,
            'coop_class': self.coop_class.value,
            'degree_count_bound': self.degree_count_bound,
            'refined_bound': self.refined_bound,
            'stage_bound': self.stage_bound,
            'uniqueness_bound': self.uniqueness_bound,
            'witness': self.witness,
            'notes': self.notes,
        }
        if self.exploratory_windows is not None:
            d['exploratory_windows'] = self.exploratory_windows
        return d


def _monoid_witness(spec, n, d, line=None):
    pieces = spec.coop_degrees.decompose(d)
    witness = {
        'kind': 'degree',
        'window': n,
        'degree': d,
        'decomposition': degrees.format_decomposition(pieces),
    }
    if line is not None:
        witness['line'] = line
    return witness


def report(spec, exploratory=False):
    """All bounds for a presentation.

    :param bool exploratory: also list windows with a positive degree shift
                             (Kochman model only)
    :rtype: CoherenceReport
    """
    r = CoherenceReport(spec)
    r.degree_count_bound = degree_count_bound(spec)
    r.notes.append("Lie(m)* and E_*[Σ_m] sit in internal degree 0, so windows are read off "
                   "the degrees of %s" % (spec.coop_degrees.name or "the cooperations"))

    if spec.coop_class is CoopClass.POLYNOMIAL_WITH_KOCHMAN_TORSION and spec.refinable:
        n, generator = refined_bound_kochman(spec)
        r.refined_bound = n
        r.witness = {
            'kind': 'kochman',
            'window': n,
            'generator': str(generator),
            'kochman_degree': generator.degree(spec.prime),
            'decomposition': degrees.format_decomposition(spec.coop_degrees.decompose(n - 2)),
        }
        r.notes.append("only classes of homological degree n-1 are paired with the cooperations "
                       "(no shift by a sum of (2p^k-2))")
        r.notes.append("a window only allows an obstruction; the refined obstruction group may be zero")
        if exploratory:
            r.exploratory_windows = exploratory_windows(spec)
            r.notes.append("exploratory windows are candidates, not obstructions")
    elif spec.coop_class is CoopClass.FLAT_COLIMIT_OF_FREE and spec.refinable:
        n = ext1_bound_flat(spec)
        r.refined_bound = n
        # Ext^0 pairs with degree n-2, Ext^1 with n-1
        if spec.coop_degrees.contains(n - 2):
            r.witness = _monoid_witness(spec, n, n - 2, line='Ext^0')
        else:
            r.witness = _monoid_witness(spec, n, n - 1, line='Ext^1')
    else:
        r.witness = _monoid_witness(spec, r.degree_count_bound, r.degree_count_bound - 2)
        if not spec.refinable:
            r.notes.append("no refined bound is computed for %s" % spec.name)

    r.stage_bound = r.refined_bound if r.refined_bound is not None else r.degree_count_bound
    r.uniqueness_bound = uniqueness_bound(spec)

    pieces = spec.coop_degrees.decompose(1)
    if pieces:
        name = pieces[0][0].label or "a cooperation generator"
        r.notes.append("%s has degree 1, so the first window is at n=3: a potential obstruction "
                       "to a 4-stage structure" % name)
    r.notes.extend(spec.notes)
    return r


def bp(p):
    """Brown-Peterson spectrum."""
    return SpectrumPresentation(
        "BP", p, degrees.bp(p, cooperations=False), degrees.bp(p),
        CoopClass.POLYNOMIAL_WITH_KOCHMAN_TORSION)


def e(i, p):
    """Johnson-Wilson spectrum E(i); its cooperations are a flat colimit of free modules."""
    notes = []
    if i == 1:
        notes.append("for i=1 this estimate is much too weak: E(1) has a unique E-infinity structure")
    return SpectrumPresentation(
        "E(%d)" % i, p, degrees.e(i, p, cooperations=False), degrees.e(i, p),
        CoopClass.FLAT_COLIMIT_OF_FREE, notes=notes)


def e_localized(i, p):
    """The localized Johnson-Wilson spectrum."""
    return SpectrumPresentation(
        "localized E(%d)" % i, p, degrees.e_localized(i, p, cooperations=False),
        degrees.e_localized(i, p), CoopClass.FREE)


def kn(n, p):
    """Morava K-theory K(n); not homotopy commutative at p=2."""
    return SpectrumPresentation(
        "K(%d)" % n, p, degrees.k(n, p, cooperations=False), degrees.k(n, p),
        CoopClass.FREE, odd_commutativity_ok=p != 2)


def pn(n, p):
    """P(n) = BP/(p, v_1, ..., v_{n-1}); treated like K(n) at p=2."""
    return SpectrumPresentation(
        "P(%d)" % n, p, degrees.p_n(n, p, cooperations=False), degrees.p_n(n, p),
        CoopClass.FREE, odd_commutativity_ok=p != 2)


def thh_bp(p):
    """THH(BP); only the stage description and Dyer-Lashof window are computed."""
    return SpectrumPresentation(
        "THH(BP)", p, degrees.thh_bp(p, cooperations=False), degrees.thh_bp(p),
        CoopClass.FREE, refinable=False)


#: preset name -> (factory, takes an index)
PRESETS = {
    'bp': (bp, False),
    'e': (e, True),
    'e-localized': (e_localized, True),
    'kn': (kn, True),
    'pn': (pn, True),
    'thh-bp': (thh_bp, False),
}


def preset(name, prime, index=1):
    """Build a preset presentation by its command line name."""
    try:
        factory, indexed = PRESETS[name]
    except KeyError:
        raise ValueError("unknown spectrum %r (known: %s)" % (name, ", ".join(sorted(PRESETS))))
    spec = factory(index, prime) if indexed else factory(prime)
    return spec.validate()
