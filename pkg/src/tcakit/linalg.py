"""Exact linear algebra over Q (fraction-free) and F_p (compiled kernel when available)."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import numpy as np

from . import _kernels
from .fields import FieldSpec


def _primitive(v: list[int]) -> list[int]:
    """Divide an integer vector by the gcd of its entries and make the leading entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        return v
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return [x // g for x in v]


def _integral(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector (zero stays zero)."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    return _primitive([int(x * den) for x in fr])


class RationalEchelon:
    """Incremental echelon basis over Q, stored as primitive integer rows.

    Elimination is fraction-free: reducing v by a row r with pivot entry a
    replaces v by a*v - v[c]*r and divides out the content.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)

    def reduce(self, vec) -> list[int]:
        v = _integral(vec)
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)}, expected {self.ncols}")
        for row, c in zip(self._rows, self._pivots):
            f = v[c]
            if f:
                a = row[c]
                v = _primitive([a * x - f * y for x, y in zip(v, row)])
        return v

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec) -> bool:
        v = self.reduce(vec)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        self._rows.append(v)
        self._pivots.append(c)
        return True

    def basis(self) -> list[list[int]]:
        return [list(r) for r in self._rows]


def echelon(field: FieldSpec, ncols: int):
    """An empty incremental echelon basis of field^ncols."""
    if field.kind == "rational":
        return RationalEchelon(ncols)
    return _kernels.ModPEchelon(ncols, field.p)


def _sparse_primitive(v: dict[int, int]) -> dict[int, int]:
    g = reduce(gcd, v.values(), 0)
    if v[min(v)] < 0:
        g = -g
    return {c: x // g for c, x in v.items()} if g != 1 else v


def _eliminate(v: dict[int, int], row: dict[int, int], c: int) -> dict[int, int]:
    """a*v - v[c]*row for the pivot entry a = row[c]; the result has no entry at c."""
    a, f = row[c], v[c]
    out = {k: a * x for k, x in v.items()} if a != 1 else dict(v)
    for k, y in row.items():
        x = out.get(k, 0) - f * y
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return out


def rref_rational(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan over Q on sparse rows.

    Each input row is a dense sequence of rationals or a mapping
    {column: integer} for sparse integer rows.

    Rows come back as primitive integer vectors sorted by pivot column; pivot
    entries are positive but not normalized to 1, and every other pivot
    column is zero in each row.
    """
    by_pivot: dict[int, dict[int, int]] = {}
    for r in rows:
        if isinstance(r, Mapping):
            # already sparse: {column: integer entry}
            v = {c: int(x) for c, x in r.items() if x}
            if any(not 0 <= c < ncols for c in v):
                raise ValueError("sparse row has a column out of range")
            if v:
                v = _sparse_primitive(v)
        else:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            v = {c: x for c, x in enumerate(_integral(r)) if x}
        while v:
            c = next((k for k in sorted(v) if k in by_pivot), None)
            if c is None:
                break
            v = _eliminate(v, by_pivot[c], c)
            if v:
                v = _sparse_primitive(v)
        if v:
            by_pivot[min(v)] = _sparse_primitive(v)
    pivots = sorted(by_pivot)
    # back substitution, last pivot first, so each row is cleared above its pivot
    for c in reversed(pivots):
        row = by_pivot[c]
        for d in pivots:
            if d < c and c in by_pivot[d]:
                by_pivot[d] = _sparse_primitive(_eliminate(by_pivot[d], row, c))
    out = []
    for c in pivots:
        dense = [0] * ncols
        for k, x in by_pivot[c].items():
            dense[k] = x
        out.append(dense)
    return out, pivots


def rref(rows: Sequence[Sequence], ncols: int, field: FieldSpec):
    if field.kind == "rational":
        return rref_rational(rows, ncols)
    if not isinstance(rows, np.ndarray):
        rows = [[field.element(x) for x in r] for r in rows]
    return _kernels.rref_mod_p(rows, ncols, field.p)


def rank(rows: Sequence[Sequence], ncols: int, field: FieldSpec) -> int:
    return len(rref(rows, ncols, field)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, field: FieldSpec) -> list[list]:
    """Basis of {x : A x = 0}, one vector per free column, in column order.

    Over Q the vectors are primitive integer vectors; over F_p they have
    entries in [0, p) and a 1 in their free column.
    """
    reduced, pivots = rref(rows, ncols, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for f in free:
        if field.kind == "rational":
            scale = reduce(lcm, (row[c] for row, c in zip(reduced, pivots) if row[f]), 1)
            v = [0] * ncols
            v[f] = scale
            for row, c in zip(reduced, pivots):
                if row[f]:
                    v[c] = -row[f] * scale // row[c]
            out.append(_primitive(v))
        else:
            p = field.p
            v = [0] * ncols
            v[f] = 1
            for row, c in zip(reduced, pivots):
                v[c] = (-row[f]) % p
            out.append(v)
    return out


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], field: FieldSpec) -> list[list]:
    n, k, m = len(a), len(b), len(b[0])
    out = [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]
    if field.kind == "prime":
        out = [[x % field.p for x in row] for row in out]
    return out


def identity(n: int, field: FieldSpec) -> list[list]:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def inverse(a: Sequence[Sequence], field: FieldSpec) -> list[list] | None:
    """Matrix inverse, or None if singular."""
    n = len(a)
    if field.kind == "rational":
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
        for c in range(n):
            piv = next((i for i in range(c, n) if aug[i][c]), None)
            if piv is None:
                return None
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
        return [row[n:] for row in aug]
    p = field.p
    aug = [[x % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    reduced, pivots = _kernels.rref_mod_p(aug, 2 * n, p)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in reduced[:n]]
