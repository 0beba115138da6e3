"""2-cyclotomic cosets mod n, minimal polynomials and the residue split."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from sympy.ntheory import is_primitive_root

from .gf2m import BinaryPolynomial, FieldContext, build_field, check_prime, multiplicative_order_of_2


@dataclass(frozen=True)
class CosetTable:
    n: int
    cosets: tuple[frozenset[int], ...]  # in increasing leader order
    leaders: tuple[int, ...]
    coset_of: dict[int, int]  # residue -> its leader

    def coset(self, i: int) -> frozenset[int]:
        return self.cosets[self.leaders.index(self.coset_of[i % self.n])]

    def is_union(self, residues) -> bool:
        s = set(residues)
        return all(self.coset(i) <= s for i in s)

    def unions(self):
        """Every union of cosets, indexed by a bitmask over ``leaders``."""
        for mask in range(1 << len(self.cosets)):
            s = set()
            for j, c in enumerate(self.cosets):
                if (mask >> j) & 1:
                    s |= c
            yield frozenset(s)


@lru_cache(maxsize=None)
def build_cosets(n: int) -> CosetTable:
    check_prime(n)
    seen: dict[int, int] = {}
    cosets = []
    for i in range(n):
        if i in seen:
            continue
        c = set()
        j = i
        while j not in c:
            c.add(j)
            j = 2 * j % n
        for j in c:
            seen[j] = i
        cosets.append(frozenset(c))
    return CosetTable(n=n, cosets=tuple(cosets), leaders=tuple(min(c) for c in cosets), coset_of=seen)


def minimal_polynomial(table: CosetTable, ctx: FieldContext, i: int) -> BinaryPolynomial:
    """Product of (x - beta^j) over the coset of i, coerced back to GF(2)[x]."""
    if table.n != ctx.n:
        raise ValueError(f"coset table is for n={table.n} but field is for n={ctx.n}")
    poly = [1]
    for j in sorted(table.coset(i)):
        poly = ctx.poly_mul(poly, [ctx.beta_pow(j), 1])
    if any(c not in (0, 1) for c in poly):
        raise ArithmeticError(f"minimal polynomial of beta^{i} has coefficients outside GF(2)")
    return BinaryPolynomial.from_coeffs(poly)


@lru_cache(maxsize=None)
def minimal_polynomials(n: int) -> dict[int, BinaryPolynomial]:
    """Leader -> minimal polynomial of beta^leader."""
    table = build_cosets(n)
    ctx = build_field(n)
    return {i: minimal_polynomial(table, ctx, i) for i in table.leaders}


@dataclass(frozen=True)
class ResidueSplit:
    n: int
    pi: int
    h: int
    Q: frozenset[int]
    N: frozenset[int]
    logs: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def two_is_residue(self) -> bool:
        return 2 in self.Q

    def log(self, i: int) -> int:
        """Discrete log of a nonzero residue to base pi."""
        return self.logs[i % self.n]

    def pi_pow(self, r: int) -> int:
        return pow(self.pi, r % (self.n - 1), self.n)


@lru_cache(maxsize=None)
def residue_split(n: int) -> ResidueSplit:
    """Q, N and the smallest primitive root pi with pi^h = 2, h = (n-1)/ord_n(2)."""
    check_prime(n)
    h = (n - 1) // multiplicative_order_of_2(n)
    for p in range(2, n):
        if pow(p, h, n) == 2 and is_primitive_root(p, n):
            pi = p
            break
    else:
        raise ArithmeticError(f"no primitive root pi mod {n} with pi^{h} = 2")
    Q = frozenset(pow(pi, 2 * r, n) for r in range((n - 1) // 2))
    N = frozenset(range(1, n)) - Q
    logs = {pow(pi, r, n): r for r in range(n - 1)}
    return ResidueSplit(n=n, pi=pi, h=h, Q=Q, N=N, logs=logs)
