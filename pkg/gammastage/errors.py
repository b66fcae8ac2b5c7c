# -*- coding: utf-8 -*-
"""Exceptions raised by gammastage.

Every domain error derives from :class:`GammaStageError`, so callers (and the
command line driver) can separate a violated precondition from a bug.
"""


class GammaStageError(Exception):
    """Base class for all domain errors."""


class NoPositiveElement(GammaStageError):
    """A degree set has no positive member (for instance: no generators)."""


class InvalidGenerator(GammaStageError):
    """Raw Kochman generator data violates one of the basis conditions."""


class SizeLimit(GammaStageError):
    """A combinatorial enumeration was asked for beyond its supported size."""


class InvalidTree(GammaStageError):
    """Malformed tree or Lie monomial data."""


class BadLeaf(GammaStageError):
    """A grafting leaf does not exist in the outer tree."""


class NoThreeStage(GammaStageError):
    """The spectrum is not homotopy commutative, so there is no 3-stage structure
    to start the obstruction theory from."""


class WrongClass(GammaStageError):
    """An operation was applied to a presentation of the wrong cooperation class."""


class CeilingReached(GammaStageError):
    """A stage search ran past its hard ceiling without finding a window."""


class StageTooLow(GammaStageError):
    """The available stage does not exceed the prime, so no Q_i exists."""


class InstabilityZero(GammaStageError):
    """The requested Dyer-Lashof operation vanishes by instability."""


class ParseError(GammaStageError):
    """A presentation file could not be parsed at all."""


class SchemaError(GammaStageError):
    """A presentation file parsed but does not match the documented schema."""


class InvariantError(GammaStageError):
    """A presentation matches the schema but violates a presentation invariant."""
