"""Dimensions of Schur modules S_lambda(k^m) and Specht modules S^lambda.

Closed forms (hook-content, hook length, Weyl) live next to the brute-force
tableau counters that check them, and next to the two-row length estimate
used for growth computations in positive characteristic.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, prod

from .errors import GuardError, UnsupportedLengthError
from .partitions import Partition, hook_lengths

SYT_GUARD = 12
SSYT_SIZE_GUARD = 10
SSYT_RANK_GUARD = 5


def schur_dim(lam: Iterable[int], m: int) -> int:
    """dim S_lambda(k^m) by the hook-content formula; 0 if lambda has more than m parts."""
    lam = Partition(lam)
    if m < 0:
        raise ValueError("rank must be nonnegative")
    if len(lam) > m:
        return 0
    num = 1
    for i, j in lam.cells():
        num *= m + j - i
    den = prod(hook_lengths(lam))
    q, r = divmod(num, den)
    assert r == 0, (lam, m)
    return q


def weyl_dim(lam: Iterable[int], m: int) -> int:
    """dim S_lambda(k^m) by Weyl's product over pairs of rows.

    Same value as :func:`schur_dim` but O(m^2) instead of O(|lambda|); the
    growth tables use this one.
    """
    lam = tuple(lam)
    if len(lam) > m:
        return 0
    parts = list(lam) + [0] * (m - len(lam))
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    return num // den


def specht_dim(lam: Iterable[int]) -> int:
    """f^lambda = |lambda|! / prod(hooks). The empty partition gives 1."""
    lam = Partition(lam)
    return factorial(lam.size()) // prod(hook_lengths(lam))


def syt_count_oracle(lam: Iterable[int]) -> int:
    """Count standard Young tableaux by placing 1, 2, ..., n one cell at a time."""
    lam = Partition(lam)
    if lam.size() > SYT_GUARD:
        raise GuardError(f"SYT enumeration refused for |lambda| = {lam.size()} > {SYT_GUARD}")

    def count(filled: tuple[int, ...]) -> int:
        if filled == tuple(lam):
            return 1
        total = 0
        for i, row in enumerate(filled):
            # next number may go at the end of row i if the cell exists and
            # the cell above it is already filled
            if row < lam[i] and (i == 0 or filled[i - 1] > row):
                total += count(filled[:i] + (row + 1,) + filled[i + 1 :])
        return total

    return count((0,) * len(lam))


def ssyt_count_oracle(lam: Iterable[int], m: int) -> int:
    """Count semistandard tableaux of shape lambda with entries in 1..m by exhaustive filling."""
    lam = Partition(lam)
    if lam.size() > SSYT_SIZE_GUARD or m > SSYT_RANK_GUARD:
        raise GuardError(
            f"SSYT enumeration refused for |lambda| = {lam.size()}, m = {m} "
            f"(limits {SSYT_SIZE_GUARD}, {SSYT_RANK_GUARD})"
        )
    if m < 0:
        raise ValueError("rank must be nonnegative")
    cells = list(lam.cells())
    grid: dict[tuple[int, int], int] = {}

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i, j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1, j] + 1)
        total = 0
        for v in range(lo, m + 1):
            grid[i, j] = v
            total += fill(k + 1)
        grid.pop((i, j), None)
        return total

    return fill(0)


def two_row_length_estimate(n: int, p: int) -> int:
    """floor(log_p((n + 1) / 2)) in exact integer arithmetic.

    This is the asymptotic estimate for the composition length of the Specht
    module S^(n,n) in characteristic p, not an exact length.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if p < 2:
        raise ValueError("p must be a prime")
    target = Fraction(n + 1, 2)
    e, power = 0, p
    while power <= target:
        e += 1
        power *= p
    return e


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def _is_rectangle_2(lam: Partition) -> bool:
    # (2^m) or (m, m)
    return (len(lam) == 2 and lam[0] == lam[1]) or (bool(lam) and lam[0] == 2 and set(lam) == {2})


def _default_modular_length(p: int) -> Callable[[Partition], int | None]:
    def evaluate(lam: Partition) -> int | None:
        if not lam or len(lam) == 1 or lam[0] == 1:
            # one row or one column: a one-dimensional module
            return 1
        if _is_rectangle_2(lam):
            half = lam[0] if len(lam) == 2 else len(lam)
            return max(1, two_row_length_estimate(half, p))
        return None

    return evaluate


@dataclass(frozen=True)
class LengthOracle:
    """Composition length of Specht modules S^lambda in a fixed characteristic.

    ``evaluator`` returns a positive integer or ``None`` for "unsupported".
    The default for characteristic 0 is constantly 1; for p > 0 it covers
    one-row and one-column shapes (length 1) and the rectangles (m, m) and
    (2^m), where it uses ``max(1, two_row_length_estimate(m, p))``.
    """

    characteristic: int = 0
    evaluator: Callable[[Partition], int | None] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.evaluator is None:
            ev = (lambda lam: 1) if self.characteristic == 0 else _default_modular_length(self.characteristic)
            object.__setattr__(self, "evaluator", ev)

    def supports(self, lam: Iterable[int]) -> bool:
        return self.evaluator(Partition(lam)) is not None

    def __call__(self, lam: Iterable[int]) -> int:
        lam = Partition(lam)
        value = self.evaluator(lam)
        if value is None:
            raise UnsupportedLengthError(
                f"no length oracle for S^{list(lam)} in characteristic {self.characteristic}"
            )
        return value

