"""Arithmetic over GF(2), GF(2)[x] and GF(2^m).

Binary polynomials are packed into Python ints: bit ``i`` is the coefficient
of ``x^i``.  Field elements of GF(2^m) are ints as well, holding their
coordinates in the polynomial basis ``1, alpha, ..., alpha^(m-1)`` of the
context's modulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import factorint, isprime
from sympy.ntheory import n_order

MAX_N = 61
# Log/antilog tables above this degree cost more to build than they save.
TABLE_MAX_M = 20


# -- raw int polynomials ----------------------------------------------------

def degree(f: int) -> int:
    return f.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two packed binary polynomials."""
    if a < b:
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pdivmod(f: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = degree(g)
    q = 0
    while f and degree(f) >= dg:
        shift = degree(f) - dg
        q |= 1 << shift
        f ^= g << shift
    return q, f


def pmod(f: int, g: int) -> int:
    return pdivmod(f, g)[1]


def pgcd(f: int, g: int) -> int:
    while g:
        f, g = g, pmod(f, g)
    return f


def pmulmod(a: int, b: int, f: int) -> int:
    return pmod(clmul(a, b), f)


def ppowmod(a: int, e: int, f: int) -> int:
    r = 1
    a = pmod(a, f)
    while e:
        if e & 1:
            r = pmulmod(r, a, f)
        a = pmulmod(a, a, f)
        e >>= 1
    return pmod(r, f)


def is_irreducible(f: int) -> bool:
    """Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1."""
    m = degree(f)
    if m < 1:
        return False
    if m == 1:
        return True
    for p in factorint(m):
        k = m // p
        xk = 2
        for _ in range(k):
            xk = pmulmod(xk, xk, f)
        if pgcd(f, xk ^ 2) != 1:
            return False
    xm = 2
    for _ in range(m):
        xm = pmulmod(xm, xm, f)
    return xm == 2


def x_is_primitive(f: int) -> bool:
    """Whether the class of x has order 2^m - 1 modulo the irreducible f."""
    m = degree(f)
    order = (1 << m) - 1
    if order == 1:
        return True
    return all(ppowmod(2, order // p, f) != 1 for p in factorint(order))


# -- BinaryPolynomial -------------------------------------------------------

@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    """A polynomial over GF(2) packed into an int."""

    value: int = 0

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("packed polynomial must be non-negative")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "BinaryPolynomial":
        v = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                v |= 1 << i
        return cls(v)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BinaryPolynomial":
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def x_n_minus_1(cls, n: int) -> "BinaryPolynomial":
        return cls((1 << n) | 1)

    @property
    def degree(self) -> int:
        return degree(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.degree + 1))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __add__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(clmul(self.value, other.value))

    def __divmod__(self, other: "BinaryPolynomial"):
        q, r = pdivmod(self.value, other.value)
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __floordiv__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return divmod(self, other)[1]

    def gcd(self, other: "BinaryPolynomial") -> "BinaryPolynomial":
        return BinaryPolynomial(pgcd(self.value, other.value))

    def divides(self, other: "BinaryPolynomial") -> bool:
        return pmod(other.value, self.value) == 0

    def is_irreducible(self) -> bool:
        return is_irreducible(self.value)

    def eval_at(self, ctx: "FieldContext", a: int) -> int:
        """Horner evaluation at a field element of ``ctx``."""
        return ctx.eval_binary(self.value, a)

    def bitstring(self, length: int | None = None) -> str:
        """Coefficients low-to-high as a 0/1 string."""
        if length is None:
            length = max(self.degree + 1, 1)
        return "".join(str((self.value >> i) & 1) for i in range(length))

    def __str__(self):
        if not self.value:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def poly_arith(f: BinaryPolynomial, g, op: str, ctx: "FieldContext | None" = None):
    """Dispatch ``add``, ``mul``, ``divmod``, ``gcd`` or ``eval_at`` by name.

    For ``eval_at`` the second argument is the field element and ``ctx`` is
    required.
    """
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "divmod":
        return divmod(f, g)
    if op == "gcd":
        return f.gcd(g)
    if op == "eval_at":
        if ctx is None:
            raise ValueError("eval_at needs a field context")
        return f.eval_at(ctx, g)
    raise ValueError(f"unknown polynomial operation {op!r}")


# -- GF(2^m) ------------------------------------------------------------------

def _smallest_primitive_modulus(m: int) -> int:
    # constant term must be 1 for irreducibility (m >= 1)
    for low in range(1, 1 << m, 2):
        f = (1 << m) | low
        if is_irreducible(f) and x_is_primitive(f):
            return f
    raise RuntimeError(f"no primitive polynomial of degree {m}")  # unreachable


@dataclass(frozen=True, eq=False)
class FieldContext:
    """GF(2^m) with m = ord_n(2), a primitive alpha and an n-th root of unity beta.

    Immutable after construction; elements are plain ints.
    """

    n: int
    m: int
    modulus: BinaryPolynomial
    alpha: int
    beta: int
    _exp: tuple[int, ...] | None = field(default=None, repr=False)
    _log: tuple[int, ...] | None = field(default=None, repr=False)
    _beta_powers: tuple[int, ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        """Size of the multiplicative group, 2^m - 1."""
        return (1 << self.m) - 1

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return pmulmod(a, b, self.modulus.value)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("zero has no inverse in GF(2^m)")
            return 0
        e %= self.order
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % self.order]
        return ppowmod(a, e, self.modulus.value)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^m)")
        if self._exp is not None:
            return self._exp[(self.order - self._log[a]) % self.order]
        return ppowmod(a, self.order - 1, self.modulus.value)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def beta_pow(self, k: int) -> int:
        """beta^k, with k taken mod n."""
        return self._beta_powers[k % self.n]

    def eval_binary(self, f: int, a: int) -> int:
        """Evaluate a packed binary polynomial at ``a`` by Horner's rule."""
        r = 0
        for i in range(degree(f), -1, -1):
            r = self.mul(r, a) ^ ((f >> i) & 1)
        return r

    def eval_poly(self, coeffs: Sequence[int], a: int) -> int:
        """Evaluate a polynomial with GF(2^m) coefficients (low-to-high)."""
        r = 0
        for c in reversed(coeffs):
            r = self.mul(r, a) ^ c
        return r

    def poly_mul(self, f: Sequence[int], g: Sequence[int]) -> list[int]:
        """Product of two polynomials over GF(2^m), coefficient lists low-to-high."""
        if not f or not g:
            return []
        out = [0] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[i + j] ^= self.mul(a, b)
        return out

    def cyclic_mul(self, f: Sequence[int], g: Sequence[int], period: int) -> list[int]:
        """Product of two polynomials over GF(2^m) modulo x^period - 1."""
        out = [0] * period
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        out[(i + j) % period] ^= self.mul(a, b)
        return out

    def hex(self, a: int) -> str:
        width = (self.m + 3) // 4
        return f"0x{a:0{width}x}"


def elem_arith(ctx: FieldContext, op: str, a: int, b: int | None = None) -> int:
    """Dispatch ``add``, ``mul``, ``inv`` or ``pow`` (b is the exponent) by name."""
    if op == "add":
        return ctx.add(a, b)
    if op == "mul":
        return ctx.mul(a, b)
    if op == "inv":
        return ctx.inv(a)
    if op == "pow":
        return ctx.pow(a, b)
    raise ValueError(f"unknown field operation {op!r}")


def check_prime(n: int) -> None:
    if not isinstance(n, int) or n <= 2 or not isprime(n):
        raise ValueError(f"n must be an odd prime, got {n!r}")
    if n > MAX_N:
        raise ValueError(f"n = {n} exceeds the supported cap {MAX_N}")


def multiplicative_order_of_2(n: int) -> int:
    return int(n_order(2, n))


@lru_cache(maxsize=None)
def build_field(n: int) -> FieldContext:
    """GF(2^m), m = ord_n(2), with the smallest primitive modulus and beta = alpha^((2^m-1)/n)."""
    check_prime(n)
    m = multiplicative_order_of_2(n)
    f = _smallest_primitive_modulus(m)
    order = (1 << m) - 1
    exp = log = None
    if m <= TABLE_MAX_M:
        e = [0] * (2 * order)
        lg = [0] * (order + 1)
        a = 1
        top = 1 << m
        for i in range(order):
            e[i] = a
            lg[a] = i
            a <<= 1
            if a & top:
                a ^= f
        e[order:] = e[:order]
        exp, log = tuple(e), tuple(lg)
    alpha = 2 if m > 1 else 1
    beta = ppowmod(alpha, order // n, f)
    powers = [1]
    for _ in range(n - 1):
        powers.append(pmulmod(powers[-1], beta, f))
    return FieldContext(
        n=n,
        m=m,
        modulus=BinaryPolynomial(f),
        alpha=alpha,
        beta=beta,
        _exp=exp,
        _log=log,
        _beta_powers=tuple(powers),
    )
