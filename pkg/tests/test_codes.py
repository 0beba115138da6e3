import itertools
import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psl2codes.codes import (
    LinearCode,
    cyclic_from_defining_set,
    dual,
    extend,
    is_type2_extremal,
    min_distance,
    puncture,
    qr_codes,
    weight_distribution,
)
from psl2codes.cyclotomic import build_cosets, residue_split
from psl2codes.errors import CapExceeded
from psl2codes.gf2m import BinaryPolynomial


def brute_distribution(code):
    counts = [0] * (code.length + 1)
    for bits in itertools.product((0, 1), repeat=code.dimension):
        w = 0
        for b, r in zip(bits, code.basis):
            if b:
                w ^= r
        counts[bin(w).count("1")] += 1
    return counts


def krawtchouk(k, x, n):
    return sum((-1) ** j * comb(x, j) * comb(n - x, k - j) for j in range(k + 1))


def macwilliams(counts, dim):
    n = len(counts) - 1
    return [sum(counts[i] * krawtchouk(k, i, n) for i in range(n + 1)) // (1 << dim) for k in range(n + 1)]


def test_cyclic_examples():
    c = cyclic_from_defining_set(7, [])
    assert c.g == BinaryPolynomial(1) and c.k == 7
    c = cyclic_from_defining_set(7, {1, 2, 4})
    assert c.g == BinaryPolynomial(0b1011) and c.k == 4
    c = cyclic_from_defining_set(7, range(1, 7))
    assert c.g == BinaryPolynomial.x_n_minus_1(7) // BinaryPolynomial(0b11) and c.k == 1
    zero = cyclic_from_defining_set(7, range(7))
    assert zero.k == 0 and zero.to_linear().dimension == 0


def test_defining_set_must_be_coset_union():
    with pytest.raises(ValueError, match="3 in T but 5"):
        cyclic_from_defining_set(7, {3})


@pytest.mark.parametrize("n", [5, 7, 11, 17, 23, 31])
def test_dimension_and_check_polynomial(n):
    for T in build_cosets(n).unions():
        c = cyclic_from_defining_set(n, T)
        assert c.k == n - len(T)
        assert c.g * c.h == BinaryPolynomial.x_n_minus_1(n)
        assert c.to_linear().dimension == c.k


def test_qr_codes():
    q, nq = qr_codes(7)
    assert {q.g, nq.g} == {BinaryPolynomial(0b1011), BinaryPolynomial(0b1101)}
    assert q.k == nq.k == 4
    assert all(c.k == 9 for c in qr_codes(17))
    with pytest.raises(ValueError):
        qr_codes(5)


def test_extend_examples():
    rep = cyclic_from_defining_set(7, range(1, 7))
    assert extend(rep) == LinearCode.repetition(8)
    assert extend(LinearCode.full(7)) == LinearCode.even_weight(8)
    assert LinearCode.even_weight(8).dimension == 7
    ext = extend(qr_codes(7)[0])
    assert (ext.length, ext.dimension, min_distance(ext)) == (8, 4, 4)


def test_puncture_examples():
    assert puncture(LinearCode.repetition(8), 0) == LinearCode.repetition(7)
    assert puncture(LinearCode.zero(8), 3) == LinearCode.zero(7)
    with pytest.raises(ValueError):
        puncture(LinearCode.zero(8), 8)


@pytest.mark.parametrize("n", [7, 11, 17, 23])
def test_extend_then_puncture(n):
    for T in build_cosets(n).unions():
        c = cyclic_from_defining_set(n, T)
        ext = extend(c)
        assert ext <= LinearCode.even_weight(n + 1)
        assert ext.dimension == c.k
        if ext.dimension and min_distance(ext) > 1:
            assert puncture(ext, n) == c.to_linear()


def test_dual_examples():
    assert dual(LinearCode.zero(8)) == LinearCode.full(8)
    assert dual(LinearCode.repetition(8)) == LinearCode.even_weight(8)
    ext = extend(qr_codes(7)[0])
    assert dual(ext) == ext
    assert all(bin(a & b).count("1") % 2 == 0 for a in ext.basis for b in ext.basis)


rows = st.lists(st.integers(min_value=0, max_value=(1 << 12) - 1), max_size=14)


@given(rows)
def test_dual_involution(rs):
    c = LinearCode.from_rows(12, rs)
    d = dual(c)
    assert c.dimension + d.dimension == 12
    assert dual(d) == c
    assert all(bin(a & b).count("1") % 2 == 0 for a in c.basis for b in d.basis)


@given(rows)
def test_rref_is_canonical(rs):
    c = LinearCode.from_rows(12, rs)
    shuffled = LinearCode.from_rows(12, list(reversed(rs)) + [a ^ b for a, b in zip(rs, rs[1:])])
    assert c == shuffled
    assert c.key() == shuffled.key()


def test_weight_distribution_examples():
    ext7 = extend(qr_codes(7)[0])
    assert weight_distribution(ext7).nonzero() == {0: 1, 4: 14, 8: 1}
    ext23 = extend(qr_codes(23)[0])
    assert weight_distribution(ext23)[8] == 759
    assert min_distance(ext23) == 8
    assert weight_distribution(LinearCode.repetition(8)).nonzero() == {0: 1, 8: 1}
    assert min_distance(LinearCode.repetition(8)) == 8


@pytest.mark.parametrize("n", [7, 17, 23])
def test_weight_distribution_matches_brute_force(n):
    for code in qr_codes(n):
        ext = extend(code)
        dist = weight_distribution(ext)
        assert list(dist.counts) == brute_distribution(ext)
        assert sum(dist.counts) == 1 << ext.dimension and dist[0] == 1


@pytest.mark.parametrize("n", [7, 11, 17, 23])
def test_macwilliams(n):
    for T in build_cosets(n).unions():
        c = extend(cyclic_from_defining_set(n, T))
        d = dual(c)
        if max(c.dimension, d.dimension) > 16:
            continue
        assert list(weight_distribution(d).counts) == macwilliams(weight_distribution(c).counts, c.dimension)


def test_chunked_enumeration_over_16_rows():
    c = extend(cyclic_from_defining_set(23, []))  # dimension 23
    dist = weight_distribution(c)
    assert dist.counts == tuple(comb(24, i) if i % 2 == 0 else 0 for i in range(25))


def test_caps():
    with pytest.raises(CapExceeded):
        weight_distribution(LinearCode.full(20), max_dim=10)
    with pytest.raises(ValueError):
        min_distance(LinearCode.zero(5))


def test_type2():
    for n, d in ((7, 4), (23, 8)):
        v = is_type2_extremal(extend(qr_codes(n)[0]))
        assert v and v.d == d
    v = is_type2_extremal(LinearCode.even_weight(8))
    assert not v and "self-dual" in v.reason
    v = is_type2_extremal(extend(qr_codes(17)[0]))
    assert not v


def test_type2_rejects_singly_even_self_dual():
    # [2,1,2] repetition is self-dual with weight 2
    v = is_type2_extremal(LinearCode.repetition(2))
    assert not v and "divisible by 4" in v.reason


def test_serialization():
    q = qr_codes(7)[0]
    payload = q.to_json(extended=True)
    assert payload == {"n": 7, "defining_set": sorted(residue_split(7).Q), "g": "1101", "extended": True}
    ext = extend(q)
    blob = json.loads(json.dumps(ext.to_json()))
    rebuilt = LinearCode.from_rows(blob["length"], [int(h, 16) for h in blob["basis"]])
    assert rebuilt == ext
