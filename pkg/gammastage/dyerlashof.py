# -*- coding: utf-8 -*-
"""Dyer-Lashof operations supplied by an n-stage structure.

The i-skeleton of EΣ_p inside an n-stage structure gives operations Q_i on
the mod p homology for i <= n - p. In upper notation

    Q^i(x) = Q_{i-|x|}(x)              (p = 2, zero if i < |x|)
    Q^i(x) = ±Q_{(2i-|x|)(p-1)}(x)     (p odd, zero if 2i < |x|)

and Q^i raises degree by i (p = 2) or 2i(p-1) (p odd). Signs are ignored.
"""

from __future__ import print_function
from enum import Enum

from gammastage import stagescan
from gammastage.errors import InstabilityZero, StageTooLow


class Status(Enum):
    AVAILABLE = "Available"
    ZERO_BY_INSTABILITY = "ZeroByInstability"
    NOT_PROVIDED_BY_STAGE = "NotProvidedByStage"


class Availability(object):
    """Whether Q^i(x) exists, with its lower index and target degree.

    :param Status status:
    :param int lower_index: i in Q_i, when the operation is not zero
    :param int target_degree: degree of Q^i(x), when available
    """

    def __init__(self, status, lower_index=None, target_degree=None):
        self.status = status
        self.lower_index = lower_index
        self.target_degree = target_degree

    def __eq__(self, other):
        if not isinstance(other, Availability):
            return NotImplemented
        return (self.status, self.lower_index, self.target_degree) == \
            (other.status, other.lower_index, other.target_degree)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<gammastage.dyerlashof.Availability %s lower=%s target=%s>" % (
            self.status.value, self.lower_index, self.target_degree)

    @property
    def available(self):
        return self.status is Status.AVAILABLE

    def as_dict(self):
        return {
            'status': self.status.value,
            'lower_index': self.lower_index,
            'target_degree': self.target_degree,
        }


class UpperWindow(object):
    """The largest upper index an n-stage supplies on a class of given degree."""

    def __init__(self, max_i, constraint):
        self.max_i = max_i
        """Largest i, or None if no Q^i is both non-zero and provided"""

        self.constraint = constraint
        """The inequality on i, e.g. ``2i-|x| <= 1``"""

    def __repr__(self):
        return "<gammastage.dyerlashof.UpperWindow max_i=%s (%s)>" % (self.max_i, self.constraint)

    def as_dict(self):
        return {'max_i': self.max_i, 'constraint': self.constraint}


def max_lower_index(p, n_stage):
    """Largest i with Q_i provided by an n-stage structure: n - p.

    :raises StageTooLow: if n_stage <= p
    """
    if n_stage <= p:
        raise StageTooLow("an %d-stage structure at p=%d provides no Dyer-Lashof operations "
                          "(the stage must exceed p)" % (n_stage, p))
    return n_stage - p


def regrade(p, i, class_degree):
    """Q^i in lower notation, ignoring what the stage provides."""
    if class_degree < 0:
        raise ValueError("class degree must be non-negative")
    if p == 2:
        if i < class_degree:
            return Availability(Status.ZERO_BY_INSTABILITY)
        return Availability(Status.AVAILABLE, i - class_degree, class_degree + i)
    if 2 * i < class_degree:
        return Availability(Status.ZERO_BY_INSTABILITY)
    return Availability(Status.AVAILABLE, (2 * i - class_degree) * (p - 1),
                        class_degree + 2 * i * (p - 1))


def availability(p, n_stage, i, class_degree):
    """Q^i(x) against the operations an n-stage structure provides."""
    found = regrade(p, i, class_degree)
    if found.available and found.lower_index > max_lower_index(p, n_stage):
        return Availability(Status.NOT_PROVIDED_BY_STAGE, found.lower_index)
    return found


def available_upper_ops(p, n_stage, class_degree):
    """Largest i with Q^i(x) non-zero and provided.

    :rtype: UpperWindow
    :raises StageTooLow: if n_stage <= p
    """
    k = max_lower_index(p, n_stage)
    if p == 2:
        return UpperWindow(class_degree + k, "i-|x| <= %d" % k)
    q = k // (p - 1)
    max_i = (class_degree + q) // 2
    if 2 * max_i < class_degree:
        max_i = None
    return UpperWindow(max_i, "2i-|x| <= %d" % q)


def target_degree(p, i, class_degree):
    """Degree of Q^i(x).

    :raises InstabilityZero: if Q^i(x) = 0 by instability
    """
    found = regrade(p, i, class_degree)
    if not found.available:
        raise InstabilityZero("Q^%d vanishes on a class of degree %d at p=%d" % (i, class_degree, p))
    return found.target_degree


def lowest_upper_index(p, class_degree):
    """Smallest i with Q^i(x) not zero by instability."""
    return class_degree if p == 2 else (class_degree + 1) // 2


def operation_table(p, n_stage, class_degree):
    """Every Q^i available on a class of the given degree.

    :returns: list of dicts with keys upper_index, lower_index, target_degree
    """
    window = available_upper_ops(p, n_stage, class_degree)
    if window.max_i is None:
        return []
    rows = []
    for i in range(lowest_upper_index(p, class_degree), window.max_i + 1):
        found = availability(p, n_stage, i, class_degree)
        rows.append({
            'upper_index': i,
            'lower_index': found.lower_index,
            'target_degree': found.target_degree,
        })
    return rows


def indecomposable_chain(p, n_stage=None):
    """The degree bookkeeping behind Q^{2p} on the generator a_{p-1} of H_*(MU).

    Q^{2p} carries a_{p-1} (degree 2p-2) to a_{(2p+1)(p-1)} up to
    decomposables; at p=2 the chain starts from a_1 in degree 2. The stage
    defaults to the refined bound for BP.
    """
    if n_stage is None:
        n_stage, _ = stagescan.refined_bound_kochman(stagescan.bp(p))
    x = 2 if p == 2 else 2 * p - 2
    source = 1 if p == 2 else p - 1
    i = 2 * p
    found = availability(p, n_stage, i, x)
    target = target_degree(p, i, x)
    return {
        'prime': p,
        'stage': n_stage,
        'source': "a_%d" % source,
        'class_degree': x,
        'upper_index': i,
        'lower_index': found.lower_index,
        'target': "a_%d" % (target // 2),
        'target_degree': target,
        'available': found.available,
    }
