import pytest

from psl2codes.cyclotomic import build_cosets, minimal_polynomial, minimal_polynomials, residue_split
from psl2codes.gf2m import BinaryPolynomial, build_field

ALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]


def coset_sets(n):
    return {frozenset(c) for c in build_cosets(n).cosets}


def test_cosets_small():
    assert coset_sets(7) == {frozenset({0}), frozenset({1, 2, 4}), frozenset({3, 5, 6})}
    assert build_cosets(7).leaders == (0, 1, 3)
    assert coset_sets(5) == {frozenset({0}), frozenset({1, 2, 3, 4})}
    assert build_cosets(5).leaders == (0, 1)
    assert coset_sets(3) == {frozenset({0}), frozenset({1, 2})}


@pytest.mark.parametrize("n", ALL_PRIMES)
def test_coset_table_invariants(n):
    table = build_cosets(n)
    m = build_field(n).m if n < 50 else None
    seen = set()
    for c in table.cosets:
        assert not (seen & c)
        seen |= c
        assert {2 * i % n for i in c} == set(c)
        if 0 not in c and m:
            assert len(c) == m
    assert seen == set(range(n))
    assert table.cosets[0] == {0}
    assert list(table.leaders) == sorted(table.leaders)


def test_rejects_composite():
    with pytest.raises(ValueError):
        build_cosets(9)


def test_minimal_polynomials_7():
    ctx = build_field(7)
    table = build_cosets(7)
    assert minimal_polynomial(table, ctx, 0) == BinaryPolynomial(0b11)
    assert minimal_polynomial(table, ctx, 1) == BinaryPolynomial(0b1011)
    with pytest.raises(ValueError):
        minimal_polynomial(table, build_field(5), 1)


@pytest.mark.parametrize("n", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_minimal_polynomials_factor_xn_minus_1(n):
    ctx = build_field(n)
    table = build_cosets(n)
    mins = minimal_polynomials(n)
    prod = BinaryPolynomial(1)
    for i, f in mins.items():
        prod = prod * f
        assert f.degree == len(table.coset(i))
        assert f.is_irreducible()
        assert f.eval_at(ctx, ctx.beta_pow(i)) == 0
    assert prod == BinaryPolynomial.x_n_minus_1(n)
    # same coset <=> same polynomial
    for i in range(n):
        for j in range(n):
            same = table.coset_of[i] == table.coset_of[j]
            assert (minimal_polynomial(table, ctx, i) == minimal_polynomial(table, ctx, j)) == same


def test_residue_split_examples():
    s7 = residue_split(7)
    assert s7.Q == {1, 2, 4} and s7.N == {3, 5, 6}
    assert s7.h == 2 and s7.pi == 3
    s5 = residue_split(5)
    assert s5.Q == {1, 4} and s5.N == {2, 3}
    assert 2 in s5.N
    assert 2 in residue_split(17).Q


@pytest.mark.parametrize("n", ALL_PRIMES)
def test_residue_split_invariants(n):
    s = residue_split(n)
    assert pow(s.pi, s.h, n) == 2
    assert len({pow(s.pi, r, n) for r in range(n - 1)}) == n - 1
    assert len(s.Q) == len(s.N) == (n - 1) // 2
    assert s.Q == {i * i % n for i in range(1, n)}
    assert all(a * b % n in s.Q for a in s.Q for b in s.Q)
    assert s.Q | s.N == set(range(1, n)) and not s.Q & s.N
    assert (2 in s.Q) == (n % 8 in (1, 7))


@pytest.mark.parametrize("n", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_saturated_unions(n):
    """Coset unions T with Q,N each inside or outside T."""
    table = build_cosets(n)
    s = residue_split(n)
    assert table.is_union(s.Q) == (2 in s.Q)
    saturated = {
        T for T in table.unions()
        if (not T & s.Q or s.Q <= T) and (not T & s.N or s.N <= T)
    }
    full = frozenset(range(n))
    trivial = {frozenset(), frozenset({0}), full - {0}, full}
    if n % 8 in (1, 7):
        assert saturated == trivial | {s.Q, s.N, s.Q | {0}, s.N | {0}}
    else:
        assert saturated == trivial
