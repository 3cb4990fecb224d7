"""Categorical Gelfand-Kirillov growth functions and log-log slope estimates.

A growth function f(N) counts the composition length of the part of a tca
generated in degrees <= N. Three families are tabulated: the free tca T(k^m),
Sym(triv_2), and the SL_2-invariants of T(k^2). Slopes of log f against log N
estimate the GK dimension from below at finite N.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .dims import LengthOracle, two_row_length_estimate, weyl_dim
from .errors import GuardError, TcaError, UnsupportedLengthError
from .fields import FieldSpec
from .partitions import iter_partitions, partition_counts

SYM_TRIV2_GUARD = 10_000


@dataclass(frozen=True)
class GrowthTable:
    family: str
    characteristic: int
    entries: tuple[tuple[int, int], ...]
    metadata: Mapping[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        entries = tuple((int(n), int(f)) for n, f in self.entries)
        object.__setattr__(self, "entries", entries)
        for (n0, f0), (n1, f1) in zip(entries, entries[1:]):
            if n1 <= n0:
                raise TcaError("growth table degrees must be strictly increasing")
            if f1 < f0:
                raise TcaError(f"growth function decreases between N={n0} and N={n1}")

    def __getitem__(self, n: int) -> int:
        for k, f in self.entries:
            if k == n:
                return f
        raise KeyError(n)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def max_degree(self) -> int:
        return self.entries[-1][0]

    def values(self) -> list[int]:
        return [f for _, f in self.entries]

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "characteristic": self.characteristic,
            "metadata": dict(self.metadata),
            "entries": [{"N": n, "f": str(f)} for n, f in self.entries],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["N", "f"])
        writer.writerows(self.entries)
        return buf.getvalue()

    @classmethod
    def from_json(cls, data: Mapping | str) -> GrowthTable:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            family=data.get("family", "unknown"),
            characteristic=int(data.get("characteristic", 0)),
            entries=tuple((int(e["N"]), int(e["f"])) for e in data["entries"]),
            metadata=data.get("metadata", {}),
        )

    @classmethod
    def from_csv(cls, text: str, family: str = "unknown", characteristic: int = 0) -> GrowthTable:
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [c.strip() for c in rows[0]] != ["N", "f"]:
            raise TcaError("growth table CSV must start with the header 'N,f'")
        entries = tuple((int(r[0]), int(r[1])) for r in rows[1:] if r)
        return cls(family, characteristic, entries)

    @classmethod
    def parse(cls, text: str) -> GrowthTable:
        """Read either serialization (JSON if it starts with '{', CSV otherwise)."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(text)
        return cls.from_csv(text)


def _cumulative(family: str, char: int, increments: Sequence[int], **metadata) -> GrowthTable:
    total, entries = 0, []
    for n, inc in enumerate(increments):
        total += inc
        entries.append((n, total))
    return GrowthTable(family, char, tuple(entries), metadata)


def _characteristic(char: FieldSpec | int) -> int:
    if isinstance(char, FieldSpec):
        return char.characteristic
    char = int(char)
    FieldSpec.from_characteristic(char)  # validates primality
    return char


def gk_free_tca(m: int, char: FieldSpec | int, N: int, lengths: LengthOracle | None = None) -> GrowthTable:
    """f(N) = sum over |lambda| <= N, at most m parts, of dim S_lambda(k^m) * len(S^lambda).

    In positive characteristic only m <= 2 is accepted, and the length of
    every two-row Specht module must be supplied by ``lengths``.
    """
    if m < 1 or N < 0:
        raise ValueError("need m >= 1 and N >= 0")
    p = _characteristic(char)
    if p > 0 and m > 2:
        raise UnsupportedLengthError(
            f"free tca of rank {m} in characteristic {p}: no length oracle for Specht modules "
            "with more than two rows"
        )
    lengths = lengths or LengthOracle(p)
    if lengths.characteristic != p:
        raise TcaError("length oracle characteristic does not match")
    increments = []
    for n in range(N + 1):
        increments.append(sum(weyl_dim(lam, m) * lengths(lam) for lam in iter_partitions(n, m)))
    return _cumulative(f"free-tca-rank-{m}", p, increments, rank=m)


def gk_sym_triv2(N: int, char: FieldSpec | int = 0) -> GrowthTable:
    """f(N) = p(0) + ... + p(N); exact in characteristic 0, a lower bound otherwise."""
    if N > SYM_TRIV2_GUARD:
        raise GuardError(f"Sym(triv_2) table refused for N = {N} > {SYM_TRIV2_GUARD}")
    p = _characteristic(char)
    meta = {"bound": "exact"} if p == 0 else {"bound": "lower", "reason": "len(S_lambda) >= 1"}
    return _cumulative("sym-triv2", p, partition_counts(N), **meta)


def sl2_piece_length(m: int, p: int) -> int:
    """Length assigned to the Specht piece S_(2^m) of T(k^2)^SL_2.

    1 in characteristic 0; in characteristic p the two-row estimate for
    S_(m,m), floored at 1.
    """
    if p == 0:
        return 1
    return max(1, two_row_length_estimate(m, p))


def gk_sl2_invariants(char: FieldSpec | int, N: int) -> GrowthTable:
    """f(N) = 1 + sum over 1 <= m <= N/2 of len(S_(2^m)); odd degrees add nothing."""
    p = _characteristic(char)
    increments = [1] + [sl2_piece_length(n // 2, p) if n % 2 == 0 else 0 for n in range(1, N + 1)]
    meta = {}
    if p > 0:
        meta = {
            "length_rule": "max(1, floor(log_p((m + 1) / 2)))",
            "floored_at_one": [m for m in range(1, N // 2 + 1) if two_row_length_estimate(m, p) == 0],
        }
    return _cumulative("sl2-invariants", p, increments, **meta)


def rescale(table: GrowthTable, step: int) -> GrowthTable:
    """The table N -> f(step * N), i.e. growth measured with a generating set in degrees <= step."""
    values = dict(table.entries)
    entries = tuple((n, values[step * n]) for n in range(table.max_degree // step + 1) if step * n in values)
    return GrowthTable(f"{table.family}-x{step}", table.characteristic, entries, {"step": step})


@dataclass(frozen=True)
class SlopeEstimate:
    window: tuple[int, int]
    slope: Fraction
    residual: float

    @property
    def decimal(self) -> str:
        return f"{float(self.slope):.12f}"

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "slope": self.decimal,
            "slope_exact": f"{self.slope.numerator}/{self.slope.denominator}",
            "residual": f"{self.residual:.6e}",
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> SlopeEstimate:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["window"]), Fraction(data["slope_exact"]), float(data["residual"]))


def estimate_slope(table: GrowthTable, window: tuple[int, int]) -> SlopeEstimate:
    """Least-squares slope of log f(N) against log N over the table entries with N in the window.

    The slope is the exact binary rational of the floating-point fit; the
    residual is the root-mean-square deviation from the fitted line.
    """
    lo, hi = window
    if not 1 <= lo < hi:
        raise TcaError(f"bad window {window}: need 1 <= N_lo < N_hi")
    if not table.entries or lo < table.entries[0][0] or hi > table.max_degree:
        raise TcaError(f"window {window} outside the table range")
    pts = [(n, f) for n, f in table.entries if lo <= n <= hi]
    if len(pts) < 2:
        raise TcaError("window holds fewer than two table entries")
    if any(f <= 0 for _, f in pts):
        raise TcaError("growth function must be positive on the window")
    xs = [math.log(n) for n, _ in pts]
    ys = [math.log(f) for _, f in pts]
    k = len(xs)
    xbar, ybar = math.fsum(xs) / k, math.fsum(ys) / k
    sxx = math.fsum((x - xbar) * (x - xbar) for x in xs)
    sxy = math.fsum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = ybar - slope * xbar
    rms = math.sqrt(math.fsum((y - intercept - slope * x) ** 2 for x, y in zip(xs, ys)) / k)
    return SlopeEstimate((lo, hi), Fraction(slope), rms)
