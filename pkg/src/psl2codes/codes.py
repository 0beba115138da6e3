"""Binary cyclic codes, QR codes, extension/puncturing and generic linear-code tools.

Codewords are packed ints, bit i = coordinate i.  The extended coordinate
infinity of a length-n cyclic code lives at index n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import gf2
from .cyclotomic import build_cosets, minimal_polynomials, residue_split
from .errors import CapExceeded
from .gf2m import BinaryPolynomial

MAX_ENUM_DIM = 28


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code held as a canonical RREF basis.

    Equality of two codes is equality of their bases.
    """

    length: int
    basis: tuple[int, ...]

    @classmethod
    def from_rows(cls, length: int, rows) -> "LinearCode":
        rows = list(rows)
        limit = 1 << length
        if any(r < 0 or r >= limit for r in rows):
            raise ValueError(f"row does not fit in length {length}")
        return cls(length, gf2.rref(rows))

    @classmethod
    def zero(cls, length: int) -> "LinearCode":
        return cls(length, ())

    @classmethod
    def full(cls, length: int) -> "LinearCode":
        return cls(length, tuple(1 << i for i in range(length)))

    @classmethod
    def repetition(cls, length: int) -> "LinearCode":
        return cls(length, ((1 << length) - 1,))

    @classmethod
    def even_weight(cls, length: int) -> "LinearCode":
        return cls.repetition(length).dual()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __contains__(self, word: int) -> bool:
        return gf2.in_span(word, self.basis)

    def __le__(self, other: "LinearCode") -> bool:
        return self.length == other.length and all(b in other for b in self.basis)

    def __add__(self, other: "LinearCode") -> "LinearCode":
        if self.length != other.length:
            raise ValueError("codes of different lengths")
        return LinearCode.from_rows(self.length, self.basis + other.basis)

    def codewords(self) -> Iterator[int]:
        """All 2^k codewords in Gray-code order."""
        w = 0
        yield w
        for i in range(1, 1 << self.dimension):
            w ^= self.basis[(i & -i).bit_length() - 1]
            yield w

    def dual(self) -> "LinearCode":
        return dual(self)

    def key(self) -> bytes:
        """Hashable canonical key (RREF rows as bytes)."""
        width = (self.length + 7) // 8
        return self.length.to_bytes(2, "little") + b"".join(r.to_bytes(width, "little") for r in self.basis)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "dimension": self.dimension,
            "basis": [f"{r:x}" for r in self.basis],
        }


@dataclass(frozen=True)
class CyclicCode:
    n: int
    defining_set: frozenset[int]
    g: BinaryPolynomial

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def h(self) -> BinaryPolynomial:
        return BinaryPolynomial.x_n_minus_1(self.n) // self.g

    def contains_poly(self, c: BinaryPolynomial) -> bool:
        return self.g.divides(c % BinaryPolynomial.x_n_minus_1(self.n))

    def to_linear(self) -> LinearCode:
        return LinearCode.from_rows(self.n, (self.g.value << i for i in range(self.k)))

    def to_json(self, extended: bool = False) -> dict:
        return {
            "n": self.n,
            "defining_set": sorted(self.defining_set),
            "g": self.g.bitstring(self.g.degree + 1),
            "extended": extended,
        }


def cyclic_from_defining_set(n: int, T) -> CyclicCode:
    """Cyclic code of length n whose generator vanishes exactly at beta^j, j in T."""
    table = build_cosets(n)
    T = frozenset(int(t) % n for t in T)
    for t in sorted(T):
        missing = table.coset(t) - T
        if missing:
            raise ValueError(f"defining set is not a union of cyclotomic cosets: {t} in T but {min(missing)} is not")
    mins = minimal_polynomials(n)
    g = BinaryPolynomial(1)
    for leader in table.leaders:
        if leader in T:
            g = g * mins[leader]
    return CyclicCode(n, T, g)


def qr_codes(n: int) -> tuple[CyclicCode, CyclicCode]:
    """The two odd-like quadratic residue codes (defining sets Q and N)."""
    if n % 8 not in (1, 7):
        raise ValueError(f"2 is not a quadratic residue mod {n} (n = {n % 8} mod 8); no binary QR code")
    split = residue_split(n)
    return cyclic_from_defining_set(n, split.Q), cyclic_from_defining_set(n, split.N)


def parity_extend_word(word: int, n: int) -> int:
    return word | ((gf2.popcount(word) & 1) << n)


def extend(code: CyclicCode | LinearCode) -> LinearCode:
    if isinstance(code, CyclicCode):
        code = code.to_linear()
    n = code.length
    return LinearCode.from_rows(n + 1, (parity_extend_word(r, n) for r in code.basis))


def puncture(code: LinearCode, pos: int) -> LinearCode:
    if not 0 <= pos < code.length:
        raise ValueError(f"position {pos} out of range for length {code.length}")
    low = (1 << pos) - 1
    rows = ((r & low) | ((r >> (pos + 1)) << pos) for r in code.basis)
    return LinearCode.from_rows(code.length - 1, rows)


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(code.length, gf2.null_space(code.basis, code.length))


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    def nonzero(self) -> dict[int, int]:
        return {i: a for i, a in enumerate(self.counts) if a}


def _check_cap(code: LinearCode, max_dim: int) -> None:
    if code.dimension > max_dim:
        raise CapExceeded(f"dimension {code.dimension} exceeds enumeration cap {max_dim}")


def _all_codewords(basis: tuple[int, ...]) -> np.ndarray:
    words = np.zeros(1, dtype=np.uint64)
    for r in basis:
        words = np.concatenate([words, words ^ np.uint64(r)])
    return words


def iter_codeword_chunks(code: LinearCode, max_dim: int = MAX_ENUM_DIM, chunk_bits: int = 16):
    """Yield all codewords as uint64 arrays of at most 2^chunk_bits entries."""
    _check_cap(code, max_dim)
    if code.length > 64:
        raise CapExceeded("codes longer than 64 coordinates are not supported")
    low, high = code.basis[:chunk_bits], code.basis[chunk_bits:]
    block = _all_codewords(low)
    for h in LinearCode(code.length, high).codewords():
        yield block ^ np.uint64(h)


def weight_distribution(code: LinearCode, max_dim: int = MAX_ENUM_DIM) -> WeightDistribution:
    """Exact counts A_0..A_length by enumerating every codeword."""
    counts = np.zeros(code.length + 1, dtype=np.int64)
    for words in iter_codeword_chunks(code, max_dim):
        counts += np.bincount(np.bitwise_count(words), minlength=code.length + 1)
    return WeightDistribution(tuple(int(c) for c in counts))


def min_distance(code: LinearCode, max_dim: int = MAX_ENUM_DIM) -> int:
    if code.dimension == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    dist = weight_distribution(code, max_dim)
    return next(i for i in range(1, len(dist)) if dist[i])


@dataclass(frozen=True)
class Type2Verdict:
    extremal: bool
    reason: str | None = None
    d: int | None = None

    def __bool__(self):
        return self.extremal


def is_type2_extremal(code: LinearCode, max_dim: int = MAX_ENUM_DIM) -> Type2Verdict:
    """Self-dual, doubly even and d = 4*floor(N/24) + 4."""
    N = code.length
    if code != code.dual():
        return Type2Verdict(False, "not self-dual")
    dist = weight_distribution(code, max_dim)
    odd = [i for i, a in enumerate(dist.counts) if a and i % 4]
    if odd:
        return Type2Verdict(False, f"weight {odd[0]} is not divisible by 4")
    d = next((i for i in range(1, N + 1) if dist[i]), None)
    bound = 4 * (N // 24) + 4
    if d != bound:
        return Type2Verdict(False, f"minimum distance {d} != {bound}", d)
    return Type2Verdict(True, None, d)
