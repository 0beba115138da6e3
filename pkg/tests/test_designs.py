import itertools
from math import comb

import pytest

from psl2codes.codes import LinearCode, extend, qr_codes, weight_distribution
from psl2codes.designs import BlockDesign, blocks_of_weight, design_sweep, mark_verified, verify_design
from psl2codes.errors import CapExceeded


def ext_qr(n):
    return extend(qr_codes(n)[0])


def naive_lambda(design, t):
    sets = design.block_sets()
    counts = {sum(1 for b in sets if set(sub) <= b) for sub in itertools.combinations(range(design.v), t)}
    return counts.pop() if len(counts) == 1 else None


def test_blocks_of_weight_examples():
    d = blocks_of_weight(ext_qr(7), 4)
    assert (d.v, d.b) == (8, 14)
    assert all(len(s) == 4 for s in d.block_sets())
    assert blocks_of_weight(ext_qr(23), 8).b == 759
    assert blocks_of_weight(ext_qr(7), 0).is_empty
    assert blocks_of_weight(ext_qr(7), 3).is_empty


def test_steiner_s348():
    d = blocks_of_weight(ext_qr(7), 4)
    check = verify_design(d, 3)
    assert (check.t, check.lam) == (3, 1)
    assert naive_lambda(d, 3) == 1
    assert mark_verified(d, check).verified == (3, 1)


def test_golay_3_design():
    d = blocks_of_weight(ext_qr(23), 8)
    check = verify_design(d, 3)
    assert check.lam == 21 == 759 * comb(8, 3) // comb(24, 3)


def test_qr17_weight6_is_2_design():
    code = ext_qr(17)
    a6 = weight_distribution(code)[6]
    d = blocks_of_weight(code, 6)
    check = verify_design(d, 2)
    assert check and check.lam * comb(18, 2) == a6 * comb(6, 2)
    assert naive_lambda(d, 2) == check.lam


def test_counterexample_reported():
    # two blocks sharing only point 0 on 5 points
    d = BlockDesign(5, 3, (0b00111, 0b11001))
    check = verify_design(d, 2)
    assert not check
    (s1, c1), (s2, c2) = check.counterexample
    assert c1 != c2


def test_verify_bounds_and_cap():
    d = blocks_of_weight(ext_qr(7), 4)
    with pytest.raises(ValueError):
        verify_design(d, 5)
    big = BlockDesign(62, 31, (1,))
    with pytest.raises(CapExceeded):
        verify_design(big, 10)


@pytest.mark.parametrize("n", [7, 17, 23])
def test_downward_identity(n):
    code = ext_qr(n)
    t = 3 if n % 4 == 3 else 2
    for k, a in weight_distribution(code).nonzero().items():
        if k in (0, code.length):
            continue
        d = blocks_of_weight(code, k)
        hi = verify_design(d, t)
        lo = verify_design(d, t - 1)
        assert hi and lo
        assert lo.lam * (k - t + 1) == hi.lam * (d.v - t + 1)


@pytest.mark.parametrize("n", [7, 23])
def test_complement_layers(n):
    code = ext_qr(n)
    v = code.length
    assert (1 << v) - 1 in code
    for k in weight_distribution(code).nonzero():
        if 0 < k < v:
            d, c = blocks_of_weight(code, k), blocks_of_weight(code, v - k)
            assert {b ^ ((1 << v) - 1) for b in d.blocks} == set(c.blocks)
            assert verify_design(d, 3) and verify_design(c, 3)


def test_sweep_7_and_23():
    rows7 = {r.k: r for r in design_sweep(7)}
    assert (rows7[4].b, rows7[4].t, rows7[4].lam) == (14, 3, 1)
    assert rows7[8].trivial
    rows23 = {r.k: r for r in design_sweep(23)}
    assert {k for k, r in rows23.items() if r.t == 3 and r.status == "ok"} >= {8, 12, 16}


def test_sweep_17_all_two_designs():
    rows = design_sweep(17)
    dist = weight_distribution(ext_qr(17))
    assert {r.k for r in rows} == set(dist.nonzero()) - {0}
    for r in rows:
        assert r.status == "ok" and r.t == 2
        assert r.lam * comb(18, 2) == dist[r.k] * comb(r.k, 2)


def test_sweep_reports_caps():
    rows = design_sweep(23, code=LinearCode.full(24), max_dim=10)
    assert rows[0].status.startswith("cap")
