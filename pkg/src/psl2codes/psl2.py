"""PSL_2(n) acting on {0, ..., n-1, inf}, invariance tests and the classification drivers.

The point infinity is index n.  A permutation ``tau`` acts on a word by
``apply(tau, w)[p] = w[tau(p)]``; with ``compose(s, t) = s o t`` this gives
``apply(compose(s, t), w) == apply(t, apply(s, w))``.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import gf2
from .codes import LinearCode, cyclic_from_defining_set, extend, puncture
from .cyclotomic import build_cosets, residue_split
from .errors import CapExceeded
from .gf2m import build_field, check_prime

MAX_GROUP_ORDER = 10**7
MAX_SPIN_N = 13
MAX_COSETS = 20

ZERO = "ZERO"
REPETITION = "REPETITION"
EVEN_WEIGHT_EXT = "EVEN_WEIGHT_EXT"
QR_Q = "QR_Q"
QR_N = "QR_N"
OTHER = "OTHER"


@dataclass(frozen=True)
class ProjPermutation:
    n: int
    map: tuple[int, ...]
    params: tuple[int, int, int, int] | None = None

    def __post_init__(self):
        if sorted(self.map) != list(range(self.n + 1)):
            raise ValueError("map is not a bijection on n + 1 points")

    @classmethod
    def from_params(cls, n: int, a: int, b: int, c: int, d: int) -> "ProjPermutation":
        """x -> (a x + c) / (b x + d) with ad - bc = 1 (mod n)."""
        a, b, c, d = a % n, b % n, c % n, d % n
        if (a * d - b * c) % n != 1:
            raise ValueError("ad - bc must be 1 mod n")
        inf = n
        images = []
        for x in range(n):
            num, den = (a * x + c) % n, (b * x + d) % n
            images.append(inf if den == 0 else num * pow(den, -1, n) % n)
        images.append(inf if b == 0 else a * pow(b, -1, n) % n)
        return cls(n, tuple(images), (a, b, c, d))

    @classmethod
    def identity(cls, n: int) -> "ProjPermutation":
        return cls(n, tuple(range(n + 1)), (1, 0, 0, 1))

    def __call__(self, p: int) -> int:
        return self.map[p]

    def compose(self, other: "ProjPermutation") -> "ProjPermutation":
        """self o other, i.e. p -> self(other(p))."""
        return ProjPermutation(self.n, tuple(self.map[q] for q in other.map))

    def inverse(self) -> "ProjPermutation":
        inv = [0] * (self.n + 1)
        for p, q in enumerate(self.map):
            inv[q] = p
        return ProjPermutation(self.n, tuple(inv))

    def is_identity(self) -> bool:
        return all(p == q for p, q in enumerate(self.map))


def generators(n: int) -> tuple[ProjPermutation, ProjPermutation]:
    """S: y -> y + 1 and T: y -> -1/y."""
    check_prime(n)
    return ProjPermutation.from_params(n, 1, 0, 1, 1), ProjPermutation.from_params(n, 0, 1, -1, 0)


@dataclass(frozen=True)
class GroupClosure:
    n: int
    elements: frozenset[tuple[int, ...]]

    @property
    def order(self) -> int:
        return len(self.elements)


def group_closure(n: int, cap: int = MAX_GROUP_ORDER) -> GroupClosure:
    """Breadth-first closure of <S, T>."""
    if n * (n * n - 1) // 2 > cap:
        raise CapExceeded(f"|PSL_2({n})| would exceed the cap {cap}")
    S, T = generators(n)
    gens = [S.map, T.map]
    start = tuple(range(n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = tuple(g[q] for q in s)
            if h not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"closure exceeded the cap {cap}")
                seen.add(h)
                queue.append(h)
    return GroupClosure(n, frozenset(seen))


def apply(perm: ProjPermutation, word: int, length: int | None = None) -> int:
    """Permute coordinates: output bit p is input bit perm(p)."""
    if length is not None and length != perm.n + 1:
        raise ValueError(f"word length {length} does not match n + 1 = {perm.n + 1}")
    if word >> (perm.n + 1):
        raise ValueError("word has bits beyond coordinate infinity")
    out = 0
    for p, q in enumerate(perm.map):
        out |= ((word >> q) & 1) << p
    return out


def _check_length(code: LinearCode) -> int:
    n = code.length - 1
    check_prime(n)
    return n


def is_invariant(code: LinearCode) -> bool:
    """Whether S and T (hence all of PSL_2(n)) map the code into itself."""
    n = _check_length(code)
    S, T = generators(n)
    return all(apply(g, b) in code for b in code.basis for g in (S, T))


def _spin(seed: int, maps: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    pivots: dict[int, int] = {}
    queue = [seed]
    while queue:
        v = queue.pop()
        r = gf2.reduce(v, pivots)
        if not r:
            continue
        pivots[gf2.low_bit(r)] = r
        for mp in maps:
            out = 0
            for p, q in enumerate(mp):
                out |= ((v >> q) & 1) << p
            queue.append(out)
    return gf2.rref(pivots.values())


def spin(seed: int, n: int) -> LinearCode:
    """Smallest PSL_2(n)-invariant subspace containing ``seed``."""
    S, T = generators(n)
    if seed >> (n + 1):
        raise ValueError("seed longer than n + 1")
    return LinearCode(n + 1, _spin(seed, (S.map, T.map)))


def _spin_range(args):
    n, start, stop = args
    S, T = generators(n)
    maps = (S.map, T.map)
    return {_spin(seed, maps) for seed in range(start, stop)}


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("PSL2CODES_THREADS", "1")))
    except ValueError:
        return 1


def all_invariant_subspaces(n: int, max_n: int = MAX_SPIN_N, workers: int | None = None) -> list[LinearCode]:
    """Every PSL_2(n)-invariant subspace of GF(2)^(n+1), by exhaustive spinning.

    Cyclic submodules come from spinning all 2^(n+1) vectors; the lattice is
    then closed under sums until nothing new appears.  Sorted by dimension,
    then basis.
    """
    check_prime(n)
    if n > max_n:
        raise CapExceeded(f"n = {n} exceeds the spin cap {max_n}")
    total = 1 << (n + 1)
    workers = worker_count() if workers is None else workers
    if workers > 1:
        step = -(-total // workers)
        jobs = [(n, a, min(a + step, total)) for a in range(0, total, step)]
        with ProcessPoolExecutor(workers) as ex:
            bases = set().union(*ex.map(_spin_range, jobs))
    else:
        bases = _spin_range((n, 0, total))
    found = set(bases)
    frontier = list(found)
    while frontier:
        new = set()
        current = list(found)
        for a in frontier:
            for b in current:
                s = gf2.rref(a + b)
                if s not in found and s not in new:
                    new.add(s)
        found |= new
        frontier = list(new)
    codes = [LinearCode(n + 1, b) for b in found]
    codes.sort(key=lambda c: (c.dimension, c.basis))
    return codes


def as_extended_cyclic(code: LinearCode) -> frozenset[int] | None:
    """Defining set T if ``code`` is the extension of a cyclic code, else None."""
    n = code.length - 1
    punct = puncture(code, n)
    shift_mask = (1 << n) - 1
    for b in punct.basis:
        shifted = ((b << 1) & shift_mask) | (b >> (n - 1))
        if shifted not in punct:
            return None
    ctx = build_field(n)
    T = frozenset(
        j for j in range(n) if all(ctx.eval_binary(b, ctx.beta_pow(j)) == 0 for b in punct.basis)
    )
    candidate = extend(cyclic_from_defining_set(n, T))
    return T if candidate == code else None


def label_for(n: int, T: frozenset[int]) -> str:
    split = residue_split(n)
    full = frozenset(range(n))
    if T == full:
        return ZERO
    if T == full - {0}:
        return REPETITION
    if not T:
        return EVEN_WEIGHT_EXT
    if T == split.Q:
        return QR_Q
    if T == split.N:
        return QR_N
    return OTHER


@dataclass(frozen=True)
class Classification:
    defining_set: frozenset[int]
    code: LinearCode
    invariant: bool
    label: str

    @property
    def dimension(self) -> int:
        return self.code.dimension

    def to_json(self) -> dict:
        return {
            "defining_set": sorted(self.defining_set),
            "dimension": self.dimension,
            "invariant": self.invariant,
            "label": self.label,
        }


def classify_all(n: int, max_cosets: int = MAX_COSETS) -> list[Classification]:
    """Invariance verdict for the extension of every cyclic code of length n."""
    table = build_cosets(n)
    if len(table.cosets) > max_cosets:
        raise CapExceeded(f"{len(table.cosets)} cyclotomic cosets exceed the cap {max_cosets}")
    out = []
    for T in table.unions():
        code = extend(cyclic_from_defining_set(n, T))
        out.append(Classification(T, code, is_invariant(code), label_for(n, T)))
    out.sort(key=lambda c: (len(c.defining_set), sorted(c.defining_set)))
    return out


def classify_extended_cyclic(n: int, max_cosets: int = MAX_COSETS) -> list[Classification]:
    """Defining sets whose extended cyclic code is PSL_2(n)-invariant."""
    return [c for c in classify_all(n, max_cosets) if c.invariant]


def predicted_invariant_sets(n: int) -> set[frozenset[int]]:
    """What the classification theorem says classify_extended_cyclic must return."""
    full = frozenset(range(n))
    expected = {frozenset(), full - {0}, full}
    if n % 8 in (1, 7):
        split = residue_split(n)
        expected |= {split.Q, split.N}
    return expected


def predicted_subspace_count(n: int) -> int:
    return 6 if n % 8 in (1, 7) else 4
