"""Exact base fields: the rationals and prime fields F_p.

Also holds the small amount of extension-field and cyclotomic arithmetic
needed to lift eigenvalues of F_p-matrices of order prime to p to complex
roots of unity (Brauer lifting), so that trace averages can be taken in
characteristic zero.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .errors import TcaError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    kind: str = "rational"
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "rational":
            if self.p is not None:
                raise TcaError("the rational field takes no p")
        elif self.kind == "prime":
            if self.p is None or not is_prime(self.p):
                raise TcaError(f"prime field needs a prime p, got {self.p!r}")
        else:
            raise TcaError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p)

    @classmethod
    def from_characteristic(cls, char: int) -> FieldSpec:
        return cls.rational() if char == 0 else cls.prime(char)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p

    def element(self, x) -> Fraction | int:
        """Convert an int, Fraction or "a/b" string to a field element."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, float):
            raise TcaError("floating-point entries are not exact; use integers or 'a/b' strings")
        else:
            x = Fraction(x)
        if self.kind == "rational":
            return x
        if x.denominator % self.p == 0:
            raise TcaError(f"{x} has no image in F_{self.p}")
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def to_json(self) -> dict:
        return {"kind": "rational"} if self.kind == "rational" else {"kind": "prime", "p": self.p}

    @classmethod
    def from_json(cls, data: Mapping) -> FieldSpec:
        kind = data.get("kind")
        return cls.rational() if kind == "rational" else cls(kind, data.get("p"))

    def __str__(self) -> str:
        return "Q" if self.kind == "rational" else f"F_{self.p}"


# -- F_{p^k} --------------------------------------------------------------


class ExtensionField:
    """F_{p^k} as F_p[x] / (f) for a monic irreducible f of degree k.

    Elements are tuples of k coefficients, lowest degree first.
    """

    def __init__(self, p: int, k: int):
        self.p, self.k = p, k
        self.modulus = _find_irreducible(p, k)
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def from_int(self, a: int) -> tuple[int, ...]:
        return ((a % self.p),) + (0,) * (self.k - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, k = self.p, self.k
        prod_ = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] = (prod_[i + j] + x * y) % p
        # reduce by the monic modulus (coefficients modulus[0..k], modulus[k] = 1)
        for d in range(2 * k - 2, k - 1, -1):
            c = prod_[d]
            if c:
                for i in range(k):
                    prod_[d - k + i] = (prod_[d - k + i] - c * self.modulus[i]) % p
                prod_[d] = 0
        return tuple(prod_[:k])

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.p**self.k - 2)

    def elements(self):
        for coeffs in product(range(self.p), repeat=self.k):
            yield tuple(coeffs)

    def element_of_order(self, e: int):
        """An element of multiplicative order exactly e (e must divide p^k - 1)."""
        if (self.p**self.k - 1) % e:
            raise TcaError(f"F_{self.p}^{self.k} has no element of order {e}")
        primes = prime_factors(e)
        for a in self.elements():
            if a == self.zero:
                continue
            if self.pow(a, e) != self.one:
                continue
            if all(self.pow(a, e // q) != self.one for q in primes):
                return a
        raise TcaError("no element of the requested order")  # unreachable for a field


def _poly_mod_is_zero(num: list[int], den: list[int], p: int) -> bool:
    num = num[:]
    inv_lead = pow(den[-1], -1, p)
    while len(num) >= len(den):
        c = (num[-1] * inv_lead) % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return not any(num)


@lru_cache(maxsize=None)
def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree k over F_p (coefficients low to high)."""
    if k == 1:
        return (0, 1)
    for low in product(range(p), repeat=k):
        f = list(low) + [1]
        if f[0] == 0:
            continue
        reducible = False
        for d in range(1, k // 2 + 1):
            for low_g in product(range(p), repeat=d):
                if _poly_mod_is_zero(f, list(low_g) + [1], p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(f)
    raise TcaError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n (gcd(a, n) must be 1)."""
    if gcd(a, n) != 1:
        raise ValueError("a must be a unit mod n")
    k, x = 1, a % n
    while x != 1 % n:
        x = (x * a) % n
        k += 1
    return k


def _kernel_dim_ext(F: ExtensionField, rows: list[list]) -> int:
    """Nullity of a square matrix over an extension field (plain Gaussian elimination)."""
    a = [r[:] for r in rows]
    n = len(a)
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, n) if a[i][c] != F.zero), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = F.inv(a[rank][c])
        a[rank] = [F.mul(x, inv) for x in a[rank]]
        for i in range(n):
            if i != rank and a[i][c] != F.zero:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[rank])]
        rank += 1
    return n - rank


def brauer_eigen_exponents(matrix: Sequence[Sequence[int]], p: int, e: int) -> list[int]:
    """Exponents j (mod e) of the eigenvalues zeta^j of an F_p matrix of order dividing e.

    ``zeta`` is a fixed primitive e-th root of unity in an extension of F_p
    (chosen deterministically), identified with exp(2 pi i / e) under the
    Brauer lift. Requires p not dividing e, so the matrix is diagonalizable.
    """
    if e % p == 0:
        raise TcaError("Brauer lifting needs an exponent prime to p")
    m = len(matrix)
    k = multiplicative_order(p, e) if e > 1 else 1
    F = ExtensionField(p, k)
    zeta = F.element_of_order(e)
    lifted = [[F.from_int(x) for x in row] for row in matrix]
    out = []
    power = F.one
    for j in range(e):
        shifted = [
            [F.sub(lifted[r][c], power) if r == c else lifted[r][c] for c in range(m)] for r in range(m)
        ]
        out.extend([j] * _kernel_dim_ext(F, shifted))
        power = F.mul(power, zeta)
    if len(out) != m:
        raise TcaError("matrix is not diagonalizable over the splitting field")
    return out


# -- Z[zeta_e] ------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_e, lowest degree first."""
    num = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            num = _exact_divide(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c = num[shift + len(den) - 1] // den[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
    assert not any(num), "inexact polynomial division"
    return q


class CyclotomicInt:
    """An element of Z[x] / (x^e - 1), evaluated at a primitive e-th root of unity."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs: Sequence[int]):
        self.e = e
        self.coeffs = list(coeffs)

    @classmethod
    def root_power_sum(cls, e: int, exponents: Sequence[int]) -> CyclotomicInt:
        coeffs = [0] * e
        for j in exponents:
            coeffs[j % e] += 1
        return cls(e, coeffs)

    @classmethod
    def constant(cls, e: int, c: int) -> CyclotomicInt:
        return cls(e, [c] + [0] * (e - 1))

    def __add__(self, other: CyclotomicInt) -> CyclotomicInt:
        return CyclotomicInt(self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: CyclotomicInt) -> CyclotomicInt:
        e = self.e
        out = [0] * e
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % e] += a * b
        return CyclotomicInt(e, out)

    def __pow__(self, n: int) -> CyclotomicInt:
        result = CyclotomicInt.constant(self.e, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_integer(self) -> int:
        """Reduce modulo Phi_e; raise unless the value is a rational integer."""
        phi = cyclotomic_polynomial(self.e)
        rem = self.coeffs[:]
        deg = len(phi) - 1
        for d in range(len(rem) - 1, deg - 1, -1):
            c = rem[d]
            if c:
                for i, x in enumerate(phi):
                    rem[d - deg + i] -= c * x
        if any(rem[1:deg]):
            raise TcaError("cyclotomic value is not a rational integer")
        return rem[0]
