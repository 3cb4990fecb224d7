"""The free tca T(W): words, the place-permutation action, and S_n characters.

Words are tuples of letters in ``1..m``. Permutations are given in one-line
notation on ``1..n``: ``sigma[i - 1]`` is the image of ``i``.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .errors import GuardError, TcaError
from .partitions import Partition, enumerate_partitions

CHARACTER_TABLE_GUARD = 10
SCHUR_WEYL_GUARD = 8


def sn_act(sigma: Sequence[int], word: Sequence[int]) -> tuple[int, ...]:
    """Left place-permutation action: the letter at position sigma(i) of the result is word[i]."""
    n = len(word)
    if len(sigma) != n:
        raise TcaError(f"permutation of degree {len(sigma)} applied to a word of degree {n}")
    if sorted(sigma) != list(range(1, n + 1)):
        raise TcaError(f"not a permutation of 1..{n}: {list(sigma)}")
    out = [0] * n
    for i, image in enumerate(sigma):
        out[image - 1] = word[i]
    return tuple(out)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """sigma * tau, i.e. apply tau first."""
    return tuple(sigma[t - 1] for t in tau)


def cycle_type(sigma: Sequence[int]) -> Partition:
    seen = [False] * len(sigma)
    lengths = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = sigma[i] - 1
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def class_size(rho: Iterable[int]) -> int:
    """Number of permutations with cycle type rho: n! / prod(i^m_i * m_i!)."""
    rho = Partition(rho)
    mult = Counter(rho)
    return factorial(rho.size()) // prod(i**k * factorial(k) for i, k in mult.items())


def sign_of_cycle_type(rho: Iterable[int]) -> int:
    rho = Partition(rho)
    return -1 if (rho.size() - len(rho)) % 2 else 1


def mn_character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """chi^lambda(rho) by the Murnaghan-Nakayama rule on beta-sets."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size() != rho.size():
        raise TcaError("lambda and rho must have the same size")
    length = len(lam)
    beta = frozenset(lam[i] + length - 1 - i for i in range(length))
    return _mn(beta, tuple(rho))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        # removing a rim hook of length r = sliding bead b down to the free position b - r
        if b - r < 0 or (b - r) in beta:
            continue
        height = sum(1 for x in beta if b - r < x < b)
        sign = -1 if height % 2 else 1
        total += sign * _mn((beta - {b}) | {b - r}, rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    n: int
    shapes: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple) -> int:
        lam, rho = key
        return self.values[self.shapes.index(Partition(lam))][self.classes.index(Partition(rho))]

    def row(self, lam: Iterable[int]) -> dict[Partition, int]:
        return dict(zip(self.classes, self.values[self.shapes.index(Partition(lam))]))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [str(lam) for lam in self.shapes],
            "columns": [str(rho) for rho in self.classes],
            "values": [list(r) for r in self.values],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> CharacterTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            n=int(data["n"]),
            shapes=tuple(Partition.parse(s) for s in data["rows"]),
            classes=tuple(Partition.parse(s) for s in data["columns"]),
            values=tuple(tuple(int(v) for v in r) for r in data["values"]),
        )


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    """Character table of S_n; rows and columns both in lexicographically decreasing order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > CHARACTER_TABLE_GUARD:
        raise GuardError(f"character table refused for n = {n} > {CHARACTER_TABLE_GUARD}")
    parts = tuple(enumerate_partitions(n))
    values = tuple(tuple(mn_character(lam, rho) for rho in parts) for lam in parts)
    return CharacterTable(n, parts, parts, values)


@dataclass(frozen=True)
class SnCharacter:
    """A class function on S_n with exact rational values, keyed by cycle type."""

    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self) -> None:
        vals = {Partition(rho): Fraction(v) for rho, v in self.values.items()}
        missing = set(enumerate_partitions(self.n)) - set(vals)
        if missing:
            raise TcaError(f"character undefined on classes {sorted(missing)}")
        object.__setattr__(self, "values", vals)

    def __getitem__(self, rho: Iterable[int]) -> Fraction:
        return self.values[Partition(rho)]

    def inner(self, other: SnCharacter | Mapping) -> Fraction:
        """<self, other> = (1/n!) sum over classes of |class| self(rho) other(rho).

        Characters of S_n are real, so no conjugation is needed.
        """
        other_values = other.values if isinstance(other, SnCharacter) else other
        total = sum(
            class_size(rho) * v * Fraction(other_values[rho]) for rho, v in self.values.items()
        )
        return Fraction(total, factorial(self.n))

    def decompose(self) -> dict[Partition, int]:
        """Multiplicities of the Specht characters, asserted to be nonnegative integers."""
        table = character_table(self.n)
        out = {}
        for lam in table.shapes:
            mult = self.inner(table.row(lam))
            if mult.denominator != 1 or mult < 0:
                raise TcaError(f"multiplicity of S^{list(lam)} is {mult}, not a nonnegative integer")
            out[lam] = int(mult)
        return out

    def degree(self) -> Fraction:
        return self[(1,) * self.n]

    def to_json(self) -> dict:
        return {"n": self.n, "values": {str(rho): str(v) for rho, v in self.values.items()}}

    @classmethod
    def from_json(cls, data: Mapping | str) -> SnCharacter:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), {Partition.parse(k): Fraction(v) for k, v in data["values"].items()})


def tensor_power_character(m: int, n: int) -> SnCharacter:
    """Trace of place permutations on (k^m)^{tensor n}: m ** (number of cycles)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if n > CHARACTER_TABLE_GUARD:
        raise GuardError(f"tensor power character refused for n = {n} > {CHARACTER_TABLE_GUARD}")
    return SnCharacter(n, {rho: Fraction(m ** len(rho)) for rho in enumerate_partitions(n)})


def schur_weyl_decompose(m: int, n: int) -> dict[Partition, int]:
    """Multiplicity of each Specht module S^lambda in T(k^m)_n, by character inner products."""
    if n > SCHUR_WEYL_GUARD:
        raise GuardError(f"Schur-Weyl decomposition refused for n = {n} > {SCHUR_WEYL_GUARD}")
    return tensor_power_character(m, n).decompose()


def words(m: int, n: int) -> list[tuple[int, ...]]:
    """The canonical basis of T(k^m)_n in lexicographic order."""
    out: list[tuple[int, ...]] = [()]
    for _ in range(n):
        out = [w + (a,) for w in out for a in range(1, m + 1)]
    return out


def word_index(word: Sequence[int], m: int) -> int:
    """Position of ``word`` in :func:`words` (base-m digits)."""
    idx = 0
    for a in word:
        if not 1 <= a <= m:
            raise TcaError(f"letter {a} out of range 1..{m}")
        idx = idx * m + (a - 1)
    return idx
