"""Integer partitions: the index set for every representation in the package."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import TcaError


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition([3, 1, 0])``
    equals ``Partition([3, 1])``. Anything that is not weakly decreasing or
    contains a negative entry raises ``ValueError``; nothing is silently sorted.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the comma-separated form ``"3,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition string {text!r}") from None
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {text!r}")
        return cls(parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), with the usual convention that parts past the end are 0."""
        return self[i] if i < len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, column) of the Young diagram, 0-based, row by row."""
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def conjugate(self) -> Partition:
        return conjugate(self)

    def to_json(self) -> list[int]:
        return list(self)


def enumerate_partitions(n: int, max_parts: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order.

    >>> [tuple(p) for p in enumerate_partitions(4, max_parts=2)]
    [(4,), (3, 1), (2, 2)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_parts is not None and max_parts < 1:
        raise ValueError("max_parts must be positive")
    return list(iter_partitions(n, max_parts))


def iter_partitions(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    """Lazy version of :func:`enumerate_partitions` (same order)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k = n if max_parts is None else max_parts
    if n == 0:
        yield Partition()
        return
    if k < 1:
        return
    if k >= n:
        yield from _zs1(n)
        return
    a = [n]
    while True:
        yield _trusted(a)
        # successor in decreasing lex order: lower the rightmost part that can
        # be lowered and refill greedily within the max_parts budget
        rem = 0
        while a:
            x = a.pop()
            rem += x
            if x == 1:
                continue
            y = x - 1
            if rem - y <= (k - len(a) - 1) * y:
                a.append(y)
                rem -= y
                while rem:
                    t = min(y, rem)
                    a.append(t)
                    rem -= t
                break
        else:
            return


def _zs1(n: int) -> Iterator[Partition]:
    # Zoghbi-Stojmenovic ZS1: all partitions of n >= 1 in decreasing lex order,
    # O(1) amortized per partition
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield _trusted(x[1:2])
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield _trusted(x[1 : m + 1])


def _trusted(parts) -> Partition:
    # skips validation; callers guarantee a weakly decreasing positive sequence
    return tuple.__new__(Partition, parts)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


def is_p_restricted(lam: Iterable[int], p: int) -> bool:
    """True iff every successive difference lam[i] - lam[i+1] (the last one against 0) is < p.

    ``p = 0`` is the characteristic-zero convention and always returns True.
    """
    if p < 0:
        raise ValueError("p must be 0 or a prime")
    if p == 0:
        return True
    lam = tuple(lam)
    return all(a - b < p for a, b in zip(lam, lam[1:] + (0,)))


def double(lam: Iterable[int]) -> Partition:
    return Partition(2 * x for x in lam)


def hook_lengths(lam: Iterable[int]) -> list[int]:
    """Hook length of every cell, listed row by row."""
    lam = Partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i, j in lam.cells()]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    return partition_counts(n)[n]


def partition_counts(n: int) -> list[int]:
    """[p(0), ..., p(n)] by Euler's pentagonal recurrence."""
    if n < 0:
        raise TcaError("n must be nonnegative")
    table = [1] + [0] * n
    for i in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[i - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= i:
                total += sign * table[i - g2]
            k += 1
        table[i] = total
    return table
