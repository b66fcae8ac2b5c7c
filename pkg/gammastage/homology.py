# -*- coding: utf-8 -*-
"""Exact integral homology of finite chain complexes.

Boundary matrices are stored sparsely. Invariant factors are found by
eliminating unit pivots first (most entries of a cellular boundary are ±1)
and handing only the remaining core to sympy's Smith normal form.
"""

from __future__ import print_function
import logging

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

log = logging.getLogger(__name__)


class SparseIntegerMatrix(object):
    """An integer matrix stored as ``{row: {col: value}}``.

    :param int n_rows: number of rows
    :param int n_cols: number of columns
    """

    def __init__(self, n_rows, n_cols):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows = {}

    def __repr__(self):
        return "<gammastage.homology.SparseIntegerMatrix %dx%d, %d non-zero>" % (
            self.n_rows, self.n_cols, self.nnz())

    def __getitem__(self, key):
        r, c = key
        return self.rows.get(r, {}).get(c, 0)

    def __eq__(self, other):
        if not isinstance(other, SparseIntegerMatrix):
            return NotImplemented
        return (self.n_rows, self.n_cols, self.rows) == (other.n_rows, other.n_cols, other.rows)

    def __ne__(self, other):
        return not self == other

    def add(self, r, c, value):
        """Add ``value`` to entry (r, c)."""
        if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
            raise IndexError("entry (%d, %d) outside a %dx%d matrix" % (r, c, self.n_rows, self.n_cols))
        row = self.rows.setdefault(r, {})
        new = row.get(c, 0) + value
        if new:
            row[c] = new
        else:
            row.pop(c, None)
            if not row:
                del self.rows[r]

    def nnz(self):
        return sum(len(row) for row in self.rows.values())

    def is_zero(self):
        return not self.rows

    def multiply(self, other):
        """Matrix product ``self * other``."""
        if self.n_cols != other.n_rows:
            raise ValueError("cannot multiply %dx%d by %dx%d" % (
                self.n_rows, self.n_cols, other.n_rows, other.n_cols))
        product = SparseIntegerMatrix(self.n_rows, other.n_cols)
        for r, row in self.rows.items():
            for k, a in row.items():
                for c, b in other.rows.get(k, {}).items():
                    product.add(r, c, a * b)
        return product

    def to_dense(self):
        return [[self[r, c] for c in range(self.n_cols)] for r in range(self.n_rows)]

    @classmethod
    def from_dense(cls, rows):
        n_cols = len(rows[0]) if rows else 0
        m = cls(len(rows), n_cols)
        for r, row in enumerate(rows):
            for c, value in enumerate(row):
                if value:
                    m.add(r, c, value)
        return m


def smith_invariants(matrix):
    """Non-zero invariant factors of an integer matrix, in divisibility order.

    The number of factors is the rank; factors greater than one are torsion
    of the cokernel.
    """
    rows = dict((r, dict(row)) for r, row in matrix.rows.items())
    cols = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    units = 0
    while True:
        pivot = None
        best = None
        for r, row in rows.items():
            for c, v in row.items():
                if v == 1 or v == -1:
                    cost = (len(row) - 1) * (len(cols[c]) - 1)
                    if best is None or cost < best:
                        best, pivot = cost, (r, c)
                        if cost == 0:
                            break
            if best == 0:
                break
        if pivot is None:
            break

        r, c = pivot
        prow = rows.pop(r)
        v = prow[c]
        for c2 in prow:
            cols[c2].discard(r)
        for r2 in list(cols[c]):
            row2 = rows[r2]
            factor = row2[c] * v
            for c2, a in prow.items():
                new = row2.get(c2, 0) - factor * a
                if new:
                    if c2 not in row2:
                        cols[c2].add(r2)
                    row2[c2] = new
                elif c2 in row2:
                    del row2[c2]
                    cols[c2].discard(r2)
            if not row2:
                del rows[r2]
        del cols[c]
        units += 1

    factors = [1] * units
    if rows:
        live_cols = sorted(c for c, members in cols.items() if members)
        index = dict((c, i) for i, c in enumerate(live_cols))
        dense = [[ZZ(0)] * len(live_cols) for _ in rows]
        for i, row in enumerate(rows.values()):
            for c, value in row.items():
                dense[i][index[c]] = ZZ(value)
        core = DomainMatrix(dense, (len(dense), len(live_cols)), ZZ)
        residual = sorted(abs(int(f)) for f in invariant_factors(core) if f)
        log.debug("smith form: %d unit pivots, %dx%d core", units, len(dense), len(live_cols))
        factors.extend(residual)
    else:
        log.debug("smith form: %d unit pivots, empty core", units)
    return factors


class HomologyGroup(object):
    """A finitely generated abelian group Z^rank + sum Z/t.

    :param int rank: free rank
    :param torsion: torsion coefficients (all > 1)
    """

    def __init__(self, rank, torsion=()):
        self.rank = rank
        self.torsion = sorted(torsion)

    def __eq__(self, other):
        if not isinstance(other, HomologyGroup):
            return NotImplemented
        return (self.rank, self.torsion) == (other.rank, other.torsion)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<gammastage.homology.HomologyGroup %s>" % self

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else "Z^%d" % self.rank)
        parts.extend("Z/%d" % t for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def as_dict(self):
        return {'rank': self.rank, 'torsion': list(self.torsion)}


class ChainComplex(object):
    """A bounded chain complex of free abelian groups.

    :param dict ranks: degree -> rank of the chain group
    :param dict boundaries: degree k -> :class:`SparseIntegerMatrix` of
                            d_k: C_k -> C_{k-1}, shaped (rank C_{k-1}, rank C_k)
    """

    def __init__(self, ranks, boundaries=None):
        self.ranks = dict(ranks)
        self.boundaries = dict(boundaries or {})
        for k, d in self.boundaries.items():
            if (d.n_rows, d.n_cols) != (self.ranks.get(k - 1, 0), self.ranks.get(k, 0)):
                raise ValueError("boundary d_%d has shape %dx%d, expected %dx%d" % (
                    k, d.n_rows, d.n_cols, self.ranks.get(k - 1, 0), self.ranks.get(k, 0)))

    def __repr__(self):
        return "<gammastage.homology.ChainComplex ranks %s>" % sorted(self.ranks.items())

    def boundary(self, k):
        d = self.boundaries.get(k)
        if d is None:
            d = SparseIntegerMatrix(self.ranks.get(k - 1, 0), self.ranks.get(k, 0))
        return d

    def check_d_squared(self):
        """True iff d_{k-1} d_k = 0 for every k."""
        for k in self.boundaries:
            if not self.boundary(k - 1).multiply(self.boundary(k)).is_zero():
                log.debug("d_%d d_%d is not zero", k - 1, k)
                return False
        return True

    def homology(self):
        """dict degree -> :class:`HomologyGroup` for every degree with a chain group."""
        invariants = {}
        for k in sorted(self.ranks):
            for j in (k, k + 1):
                if j not in invariants:
                    invariants[j] = smith_invariants(self.boundary(j))

        groups = {}
        for k in sorted(self.ranks):
            rank = self.ranks[k] - len(invariants[k]) - len(invariants[k + 1])
            torsion = [f for f in invariants[k + 1] if f > 1]
            groups[k] = HomologyGroup(rank, torsion)
        return groups
