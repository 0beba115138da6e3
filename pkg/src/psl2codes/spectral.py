"""Finite-field Fourier transform of binary words and the T-twisted spectrum identity.

Indexing conventions (used consistently by every function here):

* ``C_j = c(beta^j)`` for a binary word ``c`` of length n;
* the permuted spectrum is ``C'_s = C_{pi^s}`` for s in Z_{n-1};
* ``u(x) = sum_r beta^(pi^-r) x^r``.

With these, for every parity-extended word and its image under
``T: y -> -1/y`` one has ``D'(1/x) = u(x)^2 C'(x) mod x^(n-1) - 1``,
where the coefficient of x^s on the left is ``D'_{-s mod (n-1)}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .codes import cyclic_from_defining_set, parity_extend_word
from .cyclotomic import ResidueSplit, build_cosets, minimal_polynomials, residue_split
from .errors import FalsificationError
from .gf2 import solve
from .gf2m import BinaryPolynomial, FieldContext, build_field
from .psl2 import apply, generators


@dataclass(frozen=True)
class Spectrum:
    values: tuple[int, ...]
    ctx: FieldContext

    def __getitem__(self, j: int) -> int:
        return self.values[j % len(self.values)]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class PermutedSpectrum:
    values: tuple[int, ...]  # values[s] = C_{pi^s}
    c0: int  # time-domain constant term c_0

    def __getitem__(self, s: int) -> int:
        return self.values[s % len(self.values)]


def fourier(word: int, ctx: FieldContext) -> Spectrum:
    """C_j = c(beta^j), j = 0..n-1, for a length-n binary word."""
    n = ctx.n
    if word >> n:
        raise ValueError(f"word longer than n = {n}")
    support = [i for i in range(n) if (word >> i) & 1]
    values = []
    for j in range(n):
        acc = 0
        for i in support:
            acc ^= ctx.beta_pow(i * j)
        values.append(acc)
    return Spectrum(tuple(values), ctx)


def inverse_fourier(spec: Spectrum) -> int:
    """c_i = C_0 + sum_{k>=1} beta^(-ik) C_k; the result must be binary."""
    ctx = spec.ctx
    n = ctx.n
    word = 0
    for i in range(n):
        acc = spec.values[0]
        for k in range(1, n):
            acc ^= ctx.mul(ctx.beta_pow(-i * k), spec.values[k])
        if acc not in (0, 1):
            raise ValueError("spectrum does not come from a binary word")
        word |= acc << i
    return word


def permuted_spectrum(spec: Spectrum, split: ResidueSplit, c0: int = 0) -> PermutedSpectrum:
    n = split.n
    if len(spec) != n:
        raise ValueError("spectrum and residue split disagree on n")
    return PermutedSpectrum(tuple(spec.values[split.pi_pow(s)] for s in range(n - 1)), c0 & 1)


def unpermute(perm: PermutedSpectrum, split: ResidueSplit) -> dict[int, int]:
    """Map residue j (1..n-1) back to C_j."""
    return {split.pi_pow(s): v for s, v in enumerate(perm.values)}


def u_polynomial(split: ResidueSplit, ctx: FieldContext) -> tuple[int, ...]:
    return tuple(ctx.beta_pow(split.pi_pow(-r)) for r in range(split.n - 1))


def blahut_sides(word: int, n: int) -> tuple[list[int], list[int]]:
    """Both sides of the T-twisted identity for an extended word of length n+1.

    Returns ``(lhs, rhs)`` as coefficient lists of length n-1.
    """
    ctx = build_field(n)
    split = residue_split(n)
    _, T = generators(n)
    mask = (1 << n) - 1
    d = apply(T, word)
    C = permuted_spectrum(fourier(word & mask, ctx), split, word & 1)
    D = permuted_spectrum(fourier(d & mask, ctx), split, d & 1)
    period = n - 1
    u = u_polynomial(split, ctx)
    rhs = ctx.cyclic_mul(ctx.cyclic_mul(u, u, period), C.values, period)
    lhs = [D[(period - s) % period] for s in range(period)]
    return lhs, rhs


def check_blahut(word: int, n: int) -> bool:
    lhs, rhs = blahut_sides(word, n)
    return lhs == rhs


def random_extended_word(n: int, rng: random.Random) -> int:
    return parity_extend_word(rng.getrandbits(n), n)


def basis_representation(a: int, l: int, ctx: FieldContext) -> BinaryPolynomial:
    """f over GF(2) with deg f < m and f(beta^l) = a."""
    if l % ctx.n == 0:
        raise ValueError("l must be a nonzero residue")
    bl = ctx.beta_pow(l)
    columns = []
    x = 1
    for _ in range(ctx.m):
        columns.append(x)
        x = ctx.mul(x, bl)
    bits = solve(columns, a)
    if bits is None:
        raise FalsificationError(f"powers of beta^{l} do not span GF(2^{ctx.m})")
    return BinaryPolynomial(bits)


def _twisted_pair(ctx: FieldContext, e: int) -> int:
    return ctx.beta_pow(2 * e) ^ ctx.beta_pow(-2 * e)


def linearized_coefficients(n: int, l: int, s: int) -> tuple[int, ...]:
    """Coefficients of L_s (index w multiplies x^(2^w)) with D'_{2s} = L_s(C_l).

    Valid for a word whose spectrum vanishes off the cyclotomic coset of l.
    """
    ctx = build_field(n)
    split = residue_split(n)
    m, h = ctx.m, split.h
    lam = split.log(l)
    coeffs = [0] * m
    if split.two_is_residue:
        if lam % 2:
            raise ValueError(f"l = {l} is a nonresidue; even-index targets vanish when 2 is a residue")
        u, hh = lam // 2, h // 2
        for w in range(m):
            coeffs[w] = _twisted_pair(ctx, split.pi_pow(hh * w + s + u))
    elif lam % 2 == 0:
        u = lam // 2
        for w in range(m // 2):
            coeffs[2 * w] = _twisted_pair(ctx, split.pi_pow(h * w + s + u))
    else:
        u = lam // 2
        for w in range(m // 2):
            coeffs[2 * w + 1] = _twisted_pair(ctx, split.pi_pow(h * w + s + u + (h + 1) // 2))
    return tuple(coeffs)


def eval_linearized(ctx: FieldContext, coeffs, x: int) -> int:
    acc = 0
    power = x
    for c in coeffs:
        if c:
            acc ^= ctx.mul(c, power)
        power = ctx.square(power)
    return acc


def admissible(n: int, T, l: int, s: int) -> bool:
    split = residue_split(n)
    if not 1 <= l < n or l in set(T) or not 0 <= s <= (n - 3) // 2:
        return False
    return not split.two_is_residue or l in split.Q


def admissible_pairs(n: int, T=()) -> list[tuple[int, int]]:
    return [(l, s) for l in range(1, n) for s in range((n - 1) // 2) if admissible(n, T, l, s)]


@dataclass(frozen=True)
class WitnessReport:
    n: int
    defining_set: frozenset[int]
    l: int
    s: int
    branch: str
    gamma: int
    a: BinaryPolynomial
    codeword: int
    D_prime_2s: int

    def to_json(self, ctx: FieldContext) -> dict:
        return {
            "l": self.l,
            "s": self.s,
            "branch": self.branch,
            "gamma": ctx.hex(self.gamma),
            "a": self.a.bitstring(ctx.m),
            "codeword": f"{self.codeword:x}",
            "D_prime_2s": ctx.hex(self.D_prime_2s),
        }


def recompute_d_prime(codeword: int, n: int, index: int) -> int:
    """D'_index from scratch: extend, apply T, transform, permute."""
    ctx = build_field(n)
    _, T = generators(n)
    d = apply(T, parity_extend_word(codeword, n))
    return permuted_spectrum(fourier(d & ((1 << n) - 1), ctx), residue_split(n))[index]


def spectral_witness(n: int, T, l: int, s: int, seed: int = 0) -> WitnessReport:
    """A codeword of the code with defining set T whose T-image has D'_{2s} != 0."""
    T = frozenset(T)
    if not admissible(n, T, l, s):
        raise ValueError(f"(l={l}, s={s}) is not admissible for n={n}, T={sorted(T)}")
    ctx = build_field(n)
    split = residue_split(n)
    table = build_cosets(n)
    coeffs = linearized_coefficients(n, l, s)
    if not any(coeffs):
        raise FalsificationError(f"L_s vanishes identically for n={n}, l={l}, s={s}")
    candidates = [ctx.pow(ctx.beta_pow(l), j) for j in range(ctx.m)]
    gamma = next((g for g in candidates if eval_linearized(ctx, coeffs, g)), None)
    if gamma is None:
        rng = random.Random(seed)
        for _ in range(1000):
            g = rng.randrange(1, ctx.order + 1)
            if eval_linearized(ctx, coeffs, g):
                gamma = g
                break
        else:
            raise FalsificationError(f"no gamma with L_s(gamma) != 0 for n={n}, l={l}, s={s}")
    xn1 = BinaryPolynomial.x_n_minus_1(n)
    m_bar = xn1 // minimal_polynomials(n)[table.coset_of[l]]
    a = basis_representation(ctx.div(gamma, m_bar.eval_at(ctx, ctx.beta_pow(l))), l, ctx)
    codeword = (a * m_bar) % xn1
    value = recompute_d_prime(codeword.value, n, 2 * s)
    predicted = eval_linearized(ctx, coeffs, gamma)
    if value == 0 or value != predicted:
        raise FalsificationError(
            f"witness failed for n={n}, l={l}, s={s}: recomputed {value:#x}, predicted {predicted:#x}"
        )
    if not cyclic_from_defining_set(n, T).contains_poly(codeword):
        raise FalsificationError("witness codeword is not in the code")
    branch = "2inQ" if split.two_is_residue else "2inN"
    return WitnessReport(n, T, l, s, branch, gamma, a, codeword.value, value)


def conjugacy_holds(spec: Spectrum) -> bool:
    """C_{2j} = C_j^2 for every j."""
    ctx = spec.ctx
    return all(spec[2 * j] == ctx.square(spec[j]) for j in range(len(spec)))


