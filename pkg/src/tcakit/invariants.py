"""Finite matrix groups G in GL(W) and the invariant tca T(W)^G.

Two independent routes to the graded dimensions of T(W)^G:

* trace averaging (Molien), valid when the characteristic does not divide
  |G|; over F_p the eigenvalues are Brauer-lifted so the average is taken in
  characteristic zero;
* exact fixed spaces of g^{tensor n} on the word basis, valid in every
  characteristic, including the modular case.

On top of the fixed spaces sits the detector for new tca generators: the
part of T(W)^G_n not reached by products of lower-degree invariants and the
S_n action.
"""

from __future__ import annotations

import json
import os
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from pathlib import Path

import numpy as np

from . import linalg
from .errors import GroupTooLargeError, GuardError, ModularError, SingularMatrixError, TcaError
from .fields import CyclotomicInt, FieldSpec, brauer_eigen_exponents
from .partitions import Partition, enumerate_partitions
from .tensor_algebra import SnCharacter, words

DEFAULT_GROUP_CAP = 10_000
DEFAULT_DIMENSION_CAP = 6561
EQUIVARIANT_GUARD = 8

Matrix = tuple[tuple, ...]


def _freeze(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class MatrixGroup:
    """A finite group of invertible m x m matrices with its full element list.

    Build one with :func:`close_group` (or :meth:`from_json`); the element list
    is always computed from the generators, identity first, in breadth-first
    order.
    """

    field: FieldSpec
    m: int
    generators: tuple[Matrix, ...]
    elements: tuple[Matrix, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_modular(self) -> bool:
        p = self.field.characteristic
        return p > 0 and self.order % p == 0

    def element_order(self, g: Matrix) -> int:
        ident = _freeze(linalg.identity(self.m, self.field))
        k, x = 1, g
        while x != ident:
            x = _freeze(linalg.matmul(x, g, self.field))
            k += 1
        return k

    def exponent(self) -> int:
        return reduce(lcm, (self.element_order(g) for g in self.elements), 1)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "size": self.m,
            "generators": [[[_entry_json(x) for x in row] for row in g] for g in self.generators],
            "order": self.order,
        }

    @classmethod
    def from_json(cls, data: Mapping | str, cap: int | None = None) -> MatrixGroup:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            fld = FieldSpec.from_json(data["field"])
            m = int(data["size"])
            gens = data["generators"]
        except (KeyError, TypeError, ValueError) as exc:
            raise TcaError(f"malformed group description: {exc}") from None
        return close_group(gens, fld, m=m, cap=cap)

    @classmethod
    def load(cls, path: str | Path, cap: int | None = None) -> MatrixGroup:
        return cls.from_json(Path(path).read_text(), cap=cap)


def _entry_json(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def close_group(
    generators: Sequence[Sequence[Sequence]],
    field: FieldSpec = FieldSpec(),
    *,
    m: int | None = None,
    cap: int | None = None,
) -> MatrixGroup:
    """Breadth-first closure of ``generators`` under multiplication.

    Raises :class:`GroupTooLargeError` once more than ``cap`` elements are found.
    """
    if cap is None:
        cap = int(os.environ.get("TCAKIT_GROUP_CAP", DEFAULT_GROUP_CAP))
    gens = []
    for g in generators:
        rows = [[field.element(x) for x in row] for row in g]
        if m is None:
            m = len(rows)
        if len(rows) != m or any(len(r) != m for r in rows):
            raise TcaError(f"generator is not {m} x {m}")
        if linalg.inverse(rows, field) is None:
            raise SingularMatrixError(f"singular generator {rows}")
        gens.append(_freeze(rows))
    if m is None:
        raise TcaError("need at least one generator or an explicit size")
    ident = _freeze(linalg.identity(m, field))
    seen = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _freeze(linalg.matmul(g, x, field))
                if y not in seen:
                    seen[y] = None
                    if len(seen) > cap:
                        raise GroupTooLargeError(f"group too large or infinite: more than {cap} elements")
                    nxt.append(y)
        frontier = nxt
    return MatrixGroup(field, m, tuple(gens), tuple(seen))


# -- trace averaging ------------------------------------------------------


def _trace(g: Matrix):
    return sum(g[i][i] for i in range(len(g)))


def _lifted_traces(G: MatrixGroup):
    """Per element, a function l -> trace(g^l) lifted to characteristic zero."""
    if G.is_modular():
        raise ModularError(
            f"characteristic {G.field.p} divides |G| = {G.order}; trace averaging is invalid, "
            "use the fixed-space (kernel) method"
        )
    if G.field.kind == "rational":
        out = []
        for g in G.elements:
            powers = [None, g]

            def tr(l, g=g, powers=powers):
                while len(powers) <= l:
                    powers.append(_freeze(linalg.matmul(powers[-1], g, G.field)))
                return _trace(powers[l])

            out.append(tr)
        return out, (lambda values: Fraction(sum(values)))
    e = G.exponent()
    out = []
    for g in G.elements:
        exps = brauer_eigen_exponents(g, G.field.p, e)
        out.append(lambda l, exps=exps: CyclotomicInt.root_power_sum(e, [l * j for j in exps]))

    def total(values):
        acc = CyclotomicInt.constant(e, 0)
        for v in values:
            acc = acc + v
        return Fraction(acc.to_integer())

    return out, total


def _as_count(value: Fraction, order: int, what: str) -> int:
    avg = value / order
    if avg.denominator != 1 or avg < 0:
        raise TcaError(f"{what} averaged to {avg}, not a nonnegative integer")
    return int(avg)


def molien_dims(G: MatrixGroup, N: int) -> list[int]:
    """[dim T(W)^G_n for n = 0..N] as (1/|G|) sum_g trace(g)^n."""
    traces, total = _lifted_traces(G)
    out = []
    for n in range(N + 1):
        values = [tr(1) ** n for tr in traces]
        out.append(_as_count(total(values), G.order, f"Molien average at degree {n}"))
    return out


def equivariant_character(G: MatrixGroup, n: int) -> tuple[SnCharacter, dict[Partition, int]]:
    """S_n-character of T(W)^G_n and its Specht multiplicities (characteristic-zero semantics)."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n > EQUIVARIANT_GUARD:
        raise GuardError(f"equivariant character refused for n = {n} > {EQUIVARIANT_GUARD}")
    traces, total = _lifted_traces(G)
    values = {}
    for rho in enumerate_partitions(n):
        terms = []
        for tr in traces:
            term = None
            for part in rho:
                t = tr(part)
                term = t if term is None else term * t
            terms.append(term)
        values[rho] = total(terms) / G.order
    chi = SnCharacter(n, values)
    return chi, chi.decompose()


# -- fixed spaces ---------------------------------------------------------


@dataclass(frozen=True)
class InvariantSpace:
    """Basis of T(W)^G_n in the word basis (words in lexicographic order)."""

    degree: int
    m: int
    field: FieldSpec
    basis: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "size": self.m,
            "field": self.field.to_json(),
            "dim": self.dim,
            "basis": [[_entry_json(x) for x in v] for v in self.basis],
        }


def _dimension_check(m: int, n: int, cap: int) -> int:
    size = m**n
    if size > cap:
        raise GuardError(f"T(W)_{n} has dimension {size} > cap {cap}")
    return size


def tensor_power_matrix(g: Matrix, n: int, field: FieldSpec):
    """Matrix of g acting letterwise on T(W)_n, in the lexicographic word basis.

    Over F_p this is an int64 numpy array; over Q a list of lists of Fractions.
    """
    if field.kind == "prime":
        base = np.array(g, dtype=np.int64) % field.p
        out = np.ones((1, 1), dtype=np.int64)
        for _ in range(n):
            out = np.kron(out, base) % field.p
        return out
    out = [[Fraction(1)]]
    for _ in range(n):
        out = [
            [a * b for a in row_a for b in row_b]
            for row_a in out
            for row_b in g
        ]
    return out


def _scaled_fixed_rows(g: Matrix, n: int) -> list[dict[int, int]]:
    """Sparse integer rows of D^n (g^{tensor n} - I), where D clears the denominators of g."""
    den = reduce(lcm, (Fraction(x).denominator for row in g for x in row), 1)
    base = [{j: int(x * den) for j, x in enumerate(row) if x} for row in g]
    m = len(g)
    rows: list[dict[int, int]] = [{0: 1}]
    for _ in range(n):
        rows = [{a * m + j: x * y for a, x in ra.items() for j, y in rb.items()} for ra in rows for rb in base]
    scale = den**n
    for i, r in enumerate(rows):
        x = r.get(i, 0) - scale
        if x:
            r[i] = x
        else:
            r.pop(i, None)
    return rows


def fixed_space(G: MatrixGroup, n: int, cap: int = DEFAULT_DIMENSION_CAP) -> InvariantSpace:
    """Exact common fixed space of g^{tensor n} for the generators g of G.

    Works in every characteristic. Generators suffice: a vector fixed by
    every generator is fixed by the group they generate.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    size = _dimension_check(G.m, n, cap)
    rows = []
    for g in G.generators:
        if G.field.kind == "prime":
            rho = tensor_power_matrix(g, n, G.field)
            rows.append((rho - np.eye(size, dtype=np.int64)) % G.field.p)
        else:
            rows.extend(_scaled_fixed_rows(g, n))
    if G.field.kind == "prime":
        stacked = np.vstack(rows) if rows else np.zeros((0, size), dtype=np.int64)
        basis = linalg.nullspace(stacked, size, G.field)
    else:
        basis = linalg.nullspace(rows, size, G.field)
    return InvariantSpace(n, G.m, G.field, tuple(tuple(int(x) for x in v) for v in basis))


def fixed_space_dims(G: MatrixGroup, N: int, cap: int = DEFAULT_DIMENSION_CAP) -> list[int]:
    """[dim T(W)^G_n for n = 0..N] by exact kernels."""
    return [fixed_space(G, n, cap).dim for n in range(N + 1)]


# -- new generators -------------------------------------------------------


def _position_swap(m: int, n: int, t: int) -> list[int]:
    """Index permutation of the word basis induced by swapping positions t and t+1."""
    out = []
    for w in words(m, n):
        w = list(w)
        w[t], w[t + 1] = w[t + 1], w[t]
        idx = 0
        for a in w:
            idx = idx * m + (a - 1)
        out.append(idx)
    return out


def _concat(a: Sequence, b: Sequence, field: FieldSpec) -> list:
    """The product a * b in T(W): coefficient of word uv is a[u] * b[v]."""
    if field.kind == "prime":
        return (np.outer(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % field.p).ravel().tolist()
    return [x * y for x in a for y in b]


@dataclass
class ProductSpan:
    """The smallest S_n-stable subspace D_n of T(W)^G_n containing all products R_i R_{n-i}."""

    degree: int
    invariants: InvariantSpace
    span: object  # an echelon from linalg.echelon
    rounds: int

    @property
    def dim(self) -> int:
        return self.span.rank

    @property
    def new_generators(self) -> int:
        return self.invariants.dim - self.dim

    def contains(self, vec) -> bool:
        return self.span.contains(vec)


def product_span(G: MatrixGroup, n: int, spaces: Mapping[int, InvariantSpace] | None = None,
                 cap: int = DEFAULT_DIMENSION_CAP) -> ProductSpan:
    """Compute D_n: span all products of basis invariants, then close under adjacent transpositions."""
    if n < 1:
        raise ValueError("degree must be positive")
    spaces = dict(spaces or {})
    for i in range(1, n + 1):
        if i not in spaces:
            spaces[i] = fixed_space(G, i, cap)
    size = _dimension_check(G.m, n, cap)
    span = linalg.echelon(G.field, size)
    pending = []
    for i in range(1, n):
        for a in spaces[i].basis:
            for b in spaces[n - i].basis:
                v = _concat(a, b, G.field)
                if span.add(v):
                    pending.append(v)
    swaps = [_position_swap(G.m, n, t) for t in range(n - 1)]
    limit = n * max(spaces[n].dim, 1)
    rounds = 0
    while pending:
        rounds += 1
        if rounds > limit:
            raise TcaError(f"S_{n}-closure did not stabilize within {limit} rounds")
        v = pending.pop()
        for perm in swaps:
            w = [0] * size
            for idx, x in enumerate(v):
                w[perm[idx]] = x
            if span.add(w):
                pending.append(w)
    if span.rank > spaces[n].dim:
        raise TcaError("product span exceeds the invariant space")
    return ProductSpan(n, spaces[n], span, rounds)


def new_generators_dims(G: MatrixGroup, N: int, cap: int = DEFAULT_DIMENSION_CAP) -> list[int]:
    """[dim (R_+ / R_+^2)_n for n = 1..N] where R = T(W)^G and R_+^2 is the S_n-stable product span."""
    spaces = {n: fixed_space(G, n, cap) for n in range(1, N + 1)}
    return [product_span(G, n, spaces, cap).new_generators for n in range(1, N + 1)]


def power_sum_vector(m: int, n: int) -> list[int]:
    """x_1^n + ... + x_m^n in the word basis: the sum of the m constant words."""
    v = [0] * (m**n)
    for a in range(m):
        v[sum(a * m**k for k in range(n))] = 1
    return v


def power_sum_is_new(G: MatrixGroup, n: int, cap: int = DEFAULT_DIMENSION_CAP) -> bool:
    """True iff the power sum is invariant and lies outside the product span D_n."""
    ps = product_span(G, n, cap=cap)
    vec = power_sum_vector(G.m, n)
    inv = linalg.echelon(G.field, G.m**n)
    for b in ps.invariants.basis:
        inv.add(b)
    if not inv.contains(vec):
        raise TcaError(f"power sum of degree {n} is not invariant")
    return not ps.contains(vec)


# -- polynomial-ring crosscheck -------------------------------------------


def _poly_mul(a: dict, b: dict, field: FieldSpec) -> dict:
    """Product of sparse commutative polynomials keyed by sorted tuples of (variable, exponent)."""
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            exps = dict(ma)
            for var, e in mb:
                exps[var] = exps.get(var, 0) + e
            key = tuple(sorted(exps.items()))
            c = out.get(key, 0) + ca * cb
            if field.kind == "prime":
                c %= field.p
            out[key] = c
    return {k: c for k, c in out.items() if c}


def multilinear_fixed_dim(G: MatrixGroup, n: int) -> int:
    """dim of the multidegree (1,...,1) part of Sym(W (x) k^n)^G, via polynomial substitution.

    Variables x_{i,j} (i in W, j = 1..n) transform as x_{i,j} -> sum_k g[k][i] x_{k,j};
    the multilinear monomial prod_j x_{w_j, j} is expanded as a product of
    linear forms and its image read off in the monomial basis.
    """
    m = G.m
    monomials = [tuple(sorted(((w[j] - 1, j), 1) for j in range(n))) for w in words(m, n)]
    index = {mono: k for k, mono in enumerate(monomials)}
    size = len(monomials)
    rows = []
    for g in G.generators:
        columns = []
        for mono in monomials:
            poly = {(): 1}
            for (i, j), _ in mono:
                linear = {(((k, j), 1),): g[k][i] for k in range(m) if g[k][i]}
                poly = _poly_mul(poly, linear, G.field)
            col = [0] * size
            for key, c in poly.items():
                col[index[key]] = c
            columns.append(col)
        for r in range(size):
            rows.append([columns[c][r] - (1 if r == c else 0) for c in range(size)])
    return size - linalg.rank(rows, size, G.field)


def flat_weight_crosscheck(G: MatrixGroup, n: int, cap: int = DEFAULT_DIMENSION_CAP) -> bool:
    """Flat-weight part of the GL-invariants vs. T(W)^G_n: equal dimensions at degree n."""
    _dimension_check(G.m, n, cap)
    return multilinear_fixed_dim(G, n) == fixed_space(G, n, cap).dim


# -- common test groups ---------------------------------------------------


def scalar_sign_group(field: FieldSpec = FieldSpec()) -> MatrixGroup:
    """{+1, -1} acting on k^1."""
    return close_group([[[-1]]], field)


def swap_group(field: FieldSpec = FieldSpec()) -> MatrixGroup:
    """S_2 permuting the two coordinates of k^2."""
    return close_group([[[0, 1], [1, 0]]], field)


def symmetric_group(m: int, field: FieldSpec = FieldSpec()) -> MatrixGroup:
    """S_m permuting the coordinates of k^m (generated by a transposition and an m-cycle)."""
    if m == 1:
        return close_group([[[1]]], field)
    swap = [[int((i, j) in ((0, 1), (1, 0)) or (i == j and i > 1)) for j in range(m)] for i in range(m)]
    cycle = [[int(i == (j + 1) % m) for j in range(m)] for i in range(m)]
    return close_group([swap, cycle], field)


def cyclic3_group(field: FieldSpec = FieldSpec()) -> MatrixGroup:
    """C_3 acting faithfully on k^2 through the integer matrix [[0, -1], [1, -1]]."""
    return close_group([[[0, -1], [1, -1]]], field)
