"""Block designs held by the codewords of a fixed weight."""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import comb

import numpy as np

from .codes import MAX_ENUM_DIM, LinearCode, extend, iter_codeword_chunks, qr_codes, weight_distribution
from .errors import CapExceeded

MAX_T_SUBSETS = 10**6


@dataclass(frozen=True)
class BlockDesign:
    v: int
    k: int
    blocks: tuple[int, ...]  # bitmask per block, sorted
    verified: tuple[int, int] | None = None  # (t, lambda)

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def is_empty(self) -> bool:
        return not self.blocks

    def block_sets(self) -> list[frozenset[int]]:
        return [frozenset(i for i in range(self.v) if (m >> i) & 1) for m in self.blocks]


@dataclass(frozen=True)
class DesignCheck:
    """Outcome of verify_design: lam is set on success, counterexample otherwise."""

    t: int
    lam: int | None
    counterexample: tuple[tuple[tuple[int, ...], int], tuple[tuple[int, ...], int]] | None = None

    def __bool__(self):
        return self.lam is not None


def blocks_of_weight(code: LinearCode, k: int, max_dim: int = MAX_ENUM_DIM) -> BlockDesign:
    """Supports of all weight-k codewords of ``code``."""
    if k <= 0:
        return BlockDesign(code.length, k, ())
    found = []
    for words in iter_codeword_chunks(code, max_dim):
        found.append(words[np.bitwise_count(words) == k])
    blocks = sorted({int(w) for arr in found for w in arr})
    return BlockDesign(code.length, k, tuple(blocks))


def verify_design(design: BlockDesign, t: int) -> DesignCheck:
    """Count the blocks through every t-subset; constant count means a t-design."""
    v, k = design.v, design.k
    if not 0 <= t <= k <= v:
        raise ValueError(f"need 0 <= t <= k <= v, got t={t}, k={k}, v={v}")
    if comb(v, t) > MAX_T_SUBSETS:
        raise CapExceeded(f"C({v},{t}) t-subsets exceed the cap {MAX_T_SUBSETS}")
    blocks = np.array(design.blocks, dtype=np.uint64)
    first = None
    for subset in combinations(range(v), t):
        mask = np.uint64(sum(1 << i for i in subset))
        count = int(np.count_nonzero((blocks & mask) == mask))
        if first is None:
            first = (subset, count)
        elif count != first[1]:
            return DesignCheck(t, None, (first, (subset, count)))
    lam = first[1]
    if lam * comb(v, t) != design.b * comb(k, t):
        raise ArithmeticError("counting identity violated by a verified design")
    return DesignCheck(t, lam)


def mark_verified(design: BlockDesign, check: DesignCheck) -> BlockDesign:
    return replace(design, verified=(check.t, check.lam)) if check else design


@dataclass(frozen=True)
class SweepRow:
    k: int
    b: int
    t: int | None
    lam: int | None
    trivial: bool
    status: str

    def to_json(self) -> dict:
        return {"k": self.k, "b": self.b, "t": self.t, "lambda": self.lam, "trivial": self.trivial, "status": self.status}


def design_sweep(n: int, code: LinearCode | None = None, max_dim: int = MAX_ENUM_DIM) -> list[SweepRow]:
    """Check every nonzero weight layer of the extended QR code for a t-design.

    t = 3 when n = 3 mod 4 (3-homogeneous action), else t = 2.  The all-ones
    layer is reported as a trivial design.
    """
    if code is None:
        code = extend(qr_codes(n)[0])
    t = 3 if n % 4 == 3 else 2
    try:
        dist = weight_distribution(code, max_dim)
    except CapExceeded as exc:
        return [SweepRow(0, 0, None, None, False, f"cap: {exc}")]
    rows = []
    for k, a in dist.nonzero().items():
        if k == 0:
            continue
        try:
            design = blocks_of_weight(code, k, max_dim)
            check = verify_design(design, min(t, k))
        except CapExceeded as exc:
            rows.append(SweepRow(k, a, None, None, k == code.length, f"cap: {exc}"))
            continue
        status = "ok" if check else "not a design"
        rows.append(SweepRow(k, design.b, check.t, check.lam, k == code.length, status))
    return rows
