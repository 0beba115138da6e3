"""Bit-packed GF(2) linear algebra on int rows (bit i = column i)."""

from __future__ import annotations

from typing import Iterable, Sequence


def popcount(x: int) -> int:
    return bin(x).count("1")


def low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced row-echelon form.

    Pivots sit on the lowest set column of each row; every pivot column is
    cleared in all other rows and rows are ordered by pivot.  Two spans are
    equal iff their RREF tuples are equal.
    """
    pivots: dict[int, int] = {}
    for r in rows:
        r = reduce(r, pivots)
        if r:
            p = low_bit(r)
            for q, row in pivots.items():
                if (row >> p) & 1:
                    pivots[q] = row ^ r
            pivots[p] = r
    return tuple(pivots[p] for p in sorted(pivots))


def reduce(v: int, pivots: dict[int, int]) -> int:
    """Reduce v against a pivot->row map of a (partial) echelon basis."""
    while v:
        for p in _set_bits(v):
            row = pivots.get(p)
            if row is not None:
                v ^= row
                break
        else:
            return v
    return v


def _set_bits(v: int):
    while v:
        b = v & -v
        yield b.bit_length() - 1
        v ^= b


def pivot_map(basis: Sequence[int]) -> dict[int, int]:
    return {low_bit(r): r for r in basis}


def in_span(v: int, basis: Sequence[int]) -> bool:
    """Membership test; ``basis`` must be in RREF."""
    for r in basis:
        if (v >> low_bit(r)) & 1:
            v ^= r
    return v == 0


def rank(rows: Iterable[int]) -> int:
    return len(rref(rows))


def null_space(basis: Sequence[int], length: int) -> tuple[int, ...]:
    """RREF basis of {x : <x, r> = 0 for every row r}."""
    basis = rref(basis)
    pivots = [low_bit(r) for r in basis]
    pivot_set = set(pivots)
    out = []
    for f in range(length):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, basis):
            if (r >> f) & 1:
                v |= 1 << p
        out.append(v)
    return rref(out)


def solve(columns: Sequence[int], target: int) -> int | None:
    """Find x with XOR of columns[j] over set bits j of x equal to target.

    Returns None when target is outside the column span.
    """
    # augment each column with an identity tag above its own bits
    width = max([c.bit_length() for c in columns] + [target.bit_length(), 1])
    aug = [c | (1 << (width + j)) for j, c in enumerate(columns)]
    mask = (1 << width) - 1
    pivots: dict[int, int] = {}
    for v in aug:
        low = v & mask
        while low:
            p = low_bit(low)
            if p in pivots:
                v ^= pivots[p]
                low = v & mask
            else:
                pivots[p] = v
                break
    t = target
    x = 0
    while t:
        p = low_bit(t)
        if p not in pivots:
            return None
        row = pivots[p]
        t ^= row & mask
        x ^= row >> width
    return x
