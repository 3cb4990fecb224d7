"""Characters of polynomial GL-representations in the Schur basis.

Only characters are manipulated; no module is ever built. A character is a
:class:`SchurExpansion`, the Littlewood-Richardson rule multiplies them, and
the Schur functor is read off as the dimension of the flat (1^n) weight space.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache
from math import comb

from .dims import specht_dim
from .errors import GuardError, TcaError
from .partitions import Partition

LR_GUARD = 16


class SchurExpansion(Mapping):
    """Sparse integer combination of Schur functions s_lambda.

    Behaves as a read-only mapping ``Partition -> int`` with no zero values.
    Negative coefficients are allowed (virtual characters).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict[Partition, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, c in items:
            lam = Partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in sorted(acc.items(), key=_term_order) if c}

    @classmethod
    def schur(cls, lam: Iterable[int], coeff: int = 1) -> SchurExpansion:
        return cls({Partition(lam): coeff})

    def __getitem__(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __contains__(self, lam) -> bool:
        return Partition(lam) in self._terms

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "SchurExpansion(0)"
        body = " + ".join(f"{c}*s{list(lam)}" for lam, c in self._terms.items())
        return f"SchurExpansion({body})"

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        return SchurExpansion(list(self.items()) + list(other.items()))

    def __neg__(self) -> SchurExpansion:
        return SchurExpansion({lam: -c for lam, c in self.items()})

    def __sub__(self, other: SchurExpansion) -> SchurExpansion:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurExpansion({lam: c * other for lam, c in self.items()})
        if isinstance(other, SchurExpansion):
            acc: dict[Partition, int] = {}
            for mu, a in self.items():
                for nu, b in other.items():
                    for lam, c in lr_terms(mu, nu).items():
                        acc[lam] = acc.get(lam, 0) + a * b * c
            return SchurExpansion(acc)
        return NotImplemented

    __rmul__ = __mul__

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def degrees(self) -> set[int]:
        return {lam.size() for lam in self._terms}

    def to_json(self) -> dict[str, int]:
        return {str(lam): c for lam, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int] | str) -> SchurExpansion:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({Partition.parse(key): int(c) for key, c in data.items()})


def _term_order(item):
    lam = item[0]
    return (lam.size(), tuple(-x for x in lam))


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^lambda_{mu,nu}: the number of LR tableaux of skew shape lambda/mu and content nu."""
    return lr_terms(Partition(mu), Partition(nu)).get(Partition(lam), 0)


def lr_product(mu, nu) -> SchurExpansion:
    """s_mu * s_nu. Arguments may be partitions or whole expansions."""
    if not isinstance(mu, SchurExpansion):
        mu = SchurExpansion.schur(mu)
    if not isinstance(nu, SchurExpansion):
        nu = SchurExpansion.schur(nu)
    return mu * nu


@lru_cache(maxsize=None)
def lr_terms(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Expansion of s_mu * s_nu as a plain dict, by enumerating LR tableaux."""
    mu, nu = Partition(mu), Partition(nu)
    if mu.size() + nu.size() > LR_GUARD:
        raise GuardError(f"LR enumeration refused for |mu| + |nu| > {LR_GUARD}")
    counts: dict[Partition, int] = {}
    for shape, filling in _lr_tableaux(mu, nu):
        counts[shape] = counts.get(shape, 0) + 1
    return counts


def _lr_tableaux(mu: Partition, nu: Partition):
    """Yield (lambda, filling) for every LR tableau of shape lambda/mu with content nu.

    Letter i is placed as a horizontal strip of nu[i] cells on top of the
    current shape, which keeps the filling semistandard; the lattice condition
    on the reverse reading word is checked on the finished filling.
    """
    # filling: dict (row, col) -> letter
    def place(shape: list[int], letter: int, filling: dict):
        if letter == len(nu):
            if _is_lattice(shape, mu, filling):
                yield Partition(shape), dict(filling)
            return
        for new_shape in _horizontal_strips(shape, nu[letter]):
            added = []
            for r, (old, new) in enumerate(zip(shape + [0], new_shape)):
                for c in range(old, new):
                    filling[r, c] = letter
                    added.append((r, c))
            yield from place(new_shape, letter + 1, filling)
            for cell in added:
                del filling[cell]

    yield from place(list(mu), 0, {})


def _horizontal_strips(shape: list[int], k: int) -> Iterator[list[int]]:
    """Shapes obtained by adding k cells to ``shape``, no two in the same column."""
    rows = shape + [0]

    def rec(i: int, left: int, acc: list[int]):
        if i == len(rows):
            if left == 0:
                yield [x for x in acc if x]
            return
        # row i may grow up to the old length of row i-1 (strip condition)
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [rows[i] + add])

    yield from rec(0, k, [])


def _is_lattice(shape: list[int], mu: Partition, filling: dict) -> bool:
    seen: dict[int, int] = {}
    for r, length in enumerate(shape):
        start = mu.part(r)
        for c in range(length - 1, start - 1, -1):
            letter = filling[r, c]
            seen[letter] = seen.get(letter, 0) + 1
            if letter > 0 and seen[letter] > seen.get(letter - 1, 0):
                return False
    return True


def flat_weight_dim(x: SchurExpansion, n: int) -> int:
    """Dimension of the (1^n) weight space: sum of coeff(lambda) * f^lambda over |lambda| = n."""
    return sum(c * specht_dim(lam) for lam, c in x.items() if lam.size() == n)


def monoidality_check(mu: Iterable[int], nu: Iterable[int]) -> bool:
    """Compare the flat weight space of s_mu * s_nu with binom(d+e, d) f^mu f^nu."""
    mu, nu = Partition(mu), Partition(nu)
    d, e = mu.size(), nu.size()
    product = lr_product(mu, nu)
    if not product.is_nonnegative():
        raise TcaError("LR product of two Schur functions must be a genuine character")
    lhs = flat_weight_dim(product, d + e)
    return lhs == comb(d + e, d) * specht_dim(mu) * specht_dim(nu)
