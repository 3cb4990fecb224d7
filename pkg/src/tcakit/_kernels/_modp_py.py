"""Pure-Python mod-p elimination; the fallback when the compiled kernel is unavailable."""

from __future__ import annotations


class ModPEchelon:
    """Incrementally built row-echelon basis of a subspace of F_p^ncols."""

    def __init__(self, ncols: int, p: int):
        if p < 2 or p >= 2**31:
            raise ValueError("p must be a prime below 2**31")
        self.ncols = ncols
        self.p = p
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)

    def _as_vec(self, vec) -> list[int]:
        v = [int(x) % self.p for x in vec]
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)}, expected {self.ncols}")
        return v

    def _reduce(self, v: list[int]) -> list[int]:
        p = self.p
        for row, c in zip(self._rows, self._pivots):
            f = v[c]
            if f:
                for j in range(c, self.ncols):
                    x = row[j]
                    if x:
                        v[j] = (v[j] - f * x) % p
        return v

    def reduce(self, vec) -> list[int]:
        return self._reduce(self._as_vec(vec))

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert ``vec``; return True iff it was independent of the current span."""
        v = self.reduce(vec)
        for c, x in enumerate(v):
            if x:
                break
        else:
            return False
        inv = pow(x, self.p - 2, self.p)
        v = [(y * inv) % self.p for y in v]
        self._rows.append(v)
        self._pivots.append(c)
        return True

    def basis(self) -> list[list[int]]:
        return [list(r) for r in self._rows]


def rref_mod_p(rows, ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p. Returns (nonzero rows, pivot columns)."""
    a = [[int(x) % p for x in row] for row in rows]
    for row in a:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    nrows = len(a)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        pivot_row = [(x * inv) % p for x in a[r]]
        a[r] = pivot_row
        nz = [j for j in range(c, ncols) if pivot_row[j]]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    row = a[i]
                    for j in nz:
                        row[j] = (row[j] - f * pivot_row[j]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots
