"""Sparse exact row reduction over a FieldSpec.

Vectors are dicts ``column -> nonzero coefficient``; columns are any
hashable, totally ordered keys.  The reducer is incremental: rows are fed one
at a time, each either becomes a new pivot or reduces to zero, and in both
cases the combination of input rows producing it is tracked.
"""

from __future__ import annotations

from typing import Hashable

from .field import FieldSpec


def _axpy(fld: FieldSpec, y: dict, a, x: dict) -> None:
    """y += a*x in place, dropping zeros."""
    p = fld.p
    for k, v in x.items():
        w = y.get(k)
        w = a * v if w is None else w + a * v
        if p:
            w %= p
        if w:
            y[k] = w
        else:
            y.pop(k, None)


class RowReducer:
    """Incremental echelon form with combination tracking."""

    def __init__(self, fld: FieldSpec):
        self.fld = fld
        self.pivots: dict[Hashable, tuple[dict, dict]] = {}
        self.nrows = 0

    def reduce(self, vec: dict, combo: dict | None = None) -> tuple[dict, dict]:
        """Reduce ``vec`` against the pivots; returns (residue, combination)."""
        fld = self.fld
        v = dict(vec)
        c = dict(combo or {})
        while v:
            col = min(v)
            piv = self.pivots.get(col)
            if piv is None:
                break
            pv, pc = piv
            a = fld.neg(fld.div(v[col], pv[col]))
            _axpy(fld, v, a, pv)
            _axpy(fld, c, a, pc)
        return v, c

    def add(self, vec: dict, label: Hashable = None) -> dict | None:
        """Feed a row; returns the kernel combination if it reduces to zero."""
        idx = self.nrows if label is None else label
        self.nrows += 1
        v, c = self.reduce(vec, {idx: self.fld.one})
        if not v:
            return c
        self.pivots[min(v)] = (v, c)
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def left_kernel(rows: list[dict], fld: FieldSpec) -> list[dict]:
    """Basis of ``{c : sum c_i rows[i] = 0}`` as dicts ``row index -> coeff``."""
    red = RowReducer(fld)
    out = []
    for i, r in enumerate(rows):
        k = red.add(r, i)
        if k is not None:
            out.append(k)
    return out


def rank(rows: list[dict], fld: FieldSpec) -> int:
    red = RowReducer(fld)
    for r in rows:
        red.add(r)
    return red.rank
