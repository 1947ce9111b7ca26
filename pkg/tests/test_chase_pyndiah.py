from itertools import product

import numpy as np
import pytest

from gpcb.block_codes import encode_systematic
from gpcb.chase_pyndiah import (
    test_patterns as chase_patterns, least_reliable, chase_candidates, siso_decode,
    unpack_bits, EmptyCandidateSetError,
)

# the canonical 18-sequence list, positions 1-based as usually written
APPENDIX_PATTERNS = {
    frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2}),
    frozenset({3}), frozenset({1, 3}), frozenset({4}), frozenset({2, 3}),
    frozenset({1, 4}), frozenset({1, 2, 3}), frozenset({1, 5}),
    frozenset({2, 3, 4}), frozenset({1, 2, 3, 4}), frozenset({1, 3, 5}),
    frozenset({1, 2, 4, 5}), frozenset({1, 3, 4, 5}), frozenset({2, 3, 4, 5}),
    frozenset({1, 2, 3, 4, 5}),
}


def test_pattern_count():
    assert len(chase_patterns()) == 18


def test_pattern_set_matches_appendix():
    got = {frozenset(i + 1 for i in p) for p in chase_patterns()}
    assert got == APPENDIX_PATTERNS


def test_first_pattern_is_hard_decision():
    assert chase_patterns()[0] == frozenset()


def test_last_pattern_flips_all_five():
    assert chase_patterns()[-1] == frozenset(range(5))


def test_reduced_pattern_sets():
    for count in (1, 2, 3, 4):
        pats = chase_patterns(count)
        assert pats[0] == frozenset()
        assert len(pats) == len(set(pats))
        assert all(max(p, default=-1) < count for p in pats)


def test_least_reliable_examples():
    assert least_reliable([0.1, 5, 0.3, 4, 0.2], 3).tolist() == [0, 4, 2]
    assert least_reliable([1.0, 1.0, 1.0, 1.0], 2).tolist() == [0, 1]
    assert least_reliable([0.5, -0.2, 0.0, 0.7], 1).tolist() == [2]


def _soft_from_word(code, word, confidence=6.0):
    return (2.0 * unpack_bits(code, word) - 1.0) * confidence


def test_candidates_contain_noiseless_codeword(rs7):
    rng = np.random.default_rng(0)
    cw = encode_systematic(rs7, rng.integers(0, 8, 3))
    cands = chase_candidates(rs7, _soft_from_word(rs7, cw))
    assert any(np.array_equal(c, cw) for c in cands)


def test_candidates_recover_within_half_distance(bch15):
    rng = np.random.default_rng(1)
    for _ in range(50):
        cw = encode_systematic(bch15, rng.integers(0, 2, 7))
        soft = _soft_from_word(bch15, cw)
        flips = rng.choice(15, size=2, replace=False)
        soft[flips] *= -0.05        # wrong sign, low reliability
        cands = chase_candidates(bch15, soft)
        assert any(np.array_equal(c, cw) for c in cands)


def test_candidates_deduplicated(rs7):
    rng = np.random.default_rng(2)
    cw = encode_systematic(rs7, rng.integers(0, 8, 3))
    cands = chase_candidates(rs7, _soft_from_word(rs7, cw))
    keys = {c.tobytes() for c in cands}
    assert len(keys) == len(cands) <= 18


def test_siso_noiseless_fixed_point(rs7):
    rng = np.random.default_rng(3)
    cw = encode_systematic(rs7, rng.integers(0, 8, 3))
    bits = unpack_bits(rs7, cw)
    soft = _soft_from_word(rs7, cw)
    out = siso_decode(rs7, soft, beta=0.4)
    assert np.array_equal(out.decision, bits)
    # every extrinsic-adjusted output keeps the transmitted sign
    chips = 2.0 * bits - 1.0
    nz = out.soft_out != 0
    assert np.all(np.sign(out.soft_out[nz]) == chips[nz])


def test_extrinsic_identity(bch15):
    rng = np.random.default_rng(4)
    for _ in range(30):
        soft = rng.normal(size=15)
        out = siso_decode(bch15, soft, beta=0.3)
        assert np.array_equal(out.extrinsic, out.soft_out - soft)


def test_no_competitor_gives_beta(rs7):
    rng = np.random.default_rng(5)
    cw = encode_systematic(rs7, rng.integers(0, 8, 3))
    soft = _soft_from_word(rs7, cw, confidence=9.0)
    out = siso_decode(rs7, soft, beta=0.7)
    no_comp = ~out.competitor_found
    assert np.any(no_comp)
    assert np.allclose(np.abs(out.soft_out[no_comp]), 0.7)


def test_decision_is_distance_optimal(bch15):
    rng = np.random.default_rng(6)
    for _ in range(50):
        soft = rng.normal(size=15)
        out = siso_decode(bch15, soft, beta=0.4)
        if out.candidate_count == 0:
            continue
        cands = chase_candidates(bch15, soft)
        d_dec = np.sum((soft - (2.0 * out.decision - 1)) ** 2)
        for c in cands:
            d = np.sum((soft - (2.0 * unpack_bits(bch15, c) - 1)) ** 2)
            assert d >= d_dec - 1e-12


def test_sign_consistency(bch15):
    rng = np.random.default_rng(7)
    for _ in range(50):
        soft = rng.normal(size=15)
        out = siso_decode(bch15, soft, beta=0.4)
        chips = 2.0 * out.decision - 1.0
        nz = out.soft_out != 0
        assert np.all(np.sign(out.soft_out[nz]) == chips[nz])


def test_equidistant_competitor_zeroes_soft_output(rs7):
    # craft an input equidistant between two codewords differing somewhere
    rng = np.random.default_rng(8)
    c1 = encode_systematic(rs7, np.array([1, 0, 0]))
    c2 = encode_systematic(rs7, np.array([0, 0, 0]))
    b1 = unpack_bits(rs7, c1).astype(float)
    b2 = unpack_bits(rs7, c2).astype(float)
    soft = (b1 + b2 - 1.0)          # midpoint of the two chip vectors
    diff = b1 != b2
    soft[diff] = 0.0
    out = siso_decode(rs7, soft, beta=0.4)
    if out.candidate_count >= 2:
        assert np.any(out.soft_out == 0.0)


def test_empty_candidate_fallback(rs63):
    # random noise around zero: nearly always undecodable for RS(63,53)
    rng = np.random.default_rng(9)
    soft = rng.normal(scale=0.1, size=rs63.n_bits)
    try:
        cands = chase_candidates(rs63, soft)
        assert len(cands) >= 1      # rare but legitimate
    except EmptyCandidateSetError:
        pass
    out = siso_decode(rs63, soft, beta=0.25)
    if out.candidate_count == 0:
        assert np.array_equal(out.decision, (soft > 0).astype(np.int64))
        assert np.allclose(np.abs(out.soft_out), 0.25)
        assert not out.competitor_found.any()


def test_distance_form_equals_rho_expansion(rs7):
    """The distance-difference soft value must match the correlation
    expansion r + sum over differing positions of r*c, computed on
    exhaustive candidate sets."""
    rng = np.random.default_rng(10)
    msgs = np.array(list(product(range(8), repeat=3)))
    book = np.stack([unpack_bits(rs7, encode_systematic(rs7, m)) for m in msgs])
    chips = 2.0 * book - 1.0
    for _ in range(40):
        soft = rng.normal(size=21)
        dists = np.sum((soft[None, :] - chips) ** 2, axis=1)
        best = np.argmin(dists)
        c_best = chips[best]
        for pos in range(21):
            opp = np.flatnonzero(chips[:, pos] != c_best[pos])
            comp = opp[np.argmin(dists[opp])]
            # distance form
            r_dist = (dists[comp] - dists[best]) / 4.0 * c_best[pos]
            # rho expansion: r_j + c_j * sum_{x != j, differing} r_x c_x
            differ = chips[comp] != c_best
            differ[pos] = False
            r_rho = soft[pos] + c_best[pos] * np.sum(soft[differ] * c_best[differ])
            assert r_dist == pytest.approx(r_rho, abs=1e-9)
