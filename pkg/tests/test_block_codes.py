import numpy as np
import pytest

from gpcb.galois import Field, poly_mod, poly_eval
from gpcb.block_codes import (
    bch_spec, rs_spec, pair_construction2, encode_systematic, decode_bounded,
    is_codeword, syndromes,
    InvalidParamsError, IncompatiblePairError, LengthMismatchError,
)
from conftest import random_error_pattern


@pytest.mark.parametrize("m,t,n,k,d", [
    (6, 2, 63, 51, 5),
    (7, 2, 127, 113, 5),
    (8, 2, 255, 239, 5),
])
def test_bch_table_codes(m, t, n, k, d):
    code = bch_spec(Field(m), t)
    assert (code.n, code.k, code.d) == (n, k, d)
    # generator degree equals m*t for these codes
    assert len(code.generator) - 1 == m * t


@pytest.mark.parametrize("m,t,n,k,d", [
    (6, 5, 63, 53, 11),
    (7, 6, 127, 115, 13),
    (6, 6, 63, 51, 13),
    (8, 6, 255, 243, 13),
    (7, 7, 127, 113, 15),
])
def test_rs_table_codes(m, t, n, k, d):
    code = rs_spec(Field(m), t)
    assert (code.n, code.k, code.d) == (n, k, d)


def test_generator_divides_xn_minus_1(rs63, bch63):
    for code in (rs63, bch63):
        xn1 = [1] + [0] * (code.n - 1) + [1]  # x^n + 1
        assert poly_mod(code.field, xn1, code.generator) == []


def test_rs_generator_roots(rs63):
    for i in range(1, 2 * rs63.t + 1):
        assert poly_eval(rs63.field, rs63.generator, rs63.field.alpha_pow(i)) == 0


def test_invalid_params():
    with pytest.raises(InvalidParamsError):
        rs_spec(Field(3), 4)
    with pytest.raises(InvalidParamsError):
        bch_spec(Field(3), 0)


@pytest.mark.parametrize("m,t1,k,d2", [(6, 2, 51, 13), (7, 2, 113, 15), (8, 2, 239, 17)])
def test_pair_construction2(m, t1, k, d2):
    bch, rs = pair_construction2(Field(m), t1)
    assert bch.k == rs.k == k
    assert rs.d == d2
    assert bch.n == rs.n


def test_pair_construction2_odd_product():
    with pytest.raises(IncompatiblePairError):
        pair_construction2(Field(7), 1)  # m*t1 = 7, odd


def test_encode_zero_message(rs63):
    assert not np.any(encode_systematic(rs63, np.zeros(53, dtype=np.int64)))


def test_encode_systematic_prefix(rs7):
    rng = np.random.default_rng(0)
    msg = rng.integers(0, 8, 3)
    word = encode_systematic(rs7, msg)
    assert np.array_equal(word[:3], msg)
    assert len(word) == 7


def test_encode_divisibility(rs7):
    # codeword polynomial (index idx at x^(n-1-idx)) must divide g
    word = encode_systematic(rs7, np.array([1, 0, 0]))
    poly = [int(c) for c in word[::-1]]
    assert poly_mod(rs7.field, poly, rs7.generator) == []
    assert is_codeword(rs7, word)


def test_encode_length_mismatch(rs7):
    with pytest.raises(LengthMismatchError):
        encode_systematic(rs7, np.zeros(5, dtype=np.int64))


def test_decode_valid_word(rs63):
    rng = np.random.default_rng(1)
    word = encode_systematic(rs63, rng.integers(0, 64, 53))
    res = decode_bounded(rs63, word)
    assert res is not None
    out, nerr = res
    assert nerr == 0 and np.array_equal(out, word)


@pytest.mark.parametrize("codename", ["bch63", "bch127", "bch255", "rs63_53", "rs127_115", "rs255_243"])
def test_decode_t_errors_1000_trials(codename):
    code = {
        "bch63": bch_spec(Field(6), 2),
        "bch127": bch_spec(Field(7), 2),
        "bch255": bch_spec(Field(8), 2),
        "rs63_53": rs_spec(Field(6), 5),
        "rs127_115": rs_spec(Field(7), 6),
        "rs255_243": rs_spec(Field(8), 6),
    }[codename]
    rng = np.random.default_rng(hash(codename) % 2 ** 31)
    for _ in range(1000):
        msg = rng.integers(0, 1 << code.symbol_bits, code.k)
        cw = encode_systematic(code, msg)
        weight = rng.integers(0, code.t + 1)
        received = cw ^ random_error_pattern(rng, code, weight)
        res = decode_bounded(code, received)
        assert res is not None
        out, nerr = res
        assert np.array_equal(out, cw)
        assert nerr == weight


def test_beyond_t_gives_failure_or_valid_codeword(rs7):
    rng = np.random.default_rng(2)
    for _ in range(300):
        msg = rng.integers(0, 8, 3)
        cw = encode_systematic(rs7, msg)
        received = cw ^ random_error_pattern(rng, rs7, rs7.t + 1)
        res = decode_bounded(rs7, received)
        if res is not None:
            out, _ = res
            assert is_codeword(rs7, out)


def test_exhaustive_rs7_weight_le_2(rs7):
    rng = np.random.default_rng(3)
    msg = rng.integers(0, 8, 3)
    cw = encode_systematic(rs7, msg)
    # all weight-1 patterns
    for pos in range(7):
        for val in range(1, 8):
            w = cw.copy()
            w[pos] ^= val
            out, nerr = decode_bounded(rs7, w)
            assert np.array_equal(out, cw) and nerr == 1
    # all weight-2 position pairs, sampled values
    for p1 in range(7):
        for p2 in range(p1 + 1, 7):
            for v1, v2 in ((1, 1), (3, 5), (7, 2)):
                w = cw.copy()
                w[p1] ^= v1
                w[p2] ^= v2
                out, nerr = decode_bounded(rs7, w)
                assert np.array_equal(out, cw) and nerr == 2


def test_syndromes_zero_iff_codeword(bch15):
    rng = np.random.default_rng(4)
    cw = encode_systematic(bch15, rng.integers(0, 2, 7))
    assert not np.any(syndromes(bch15, cw))
    bad = cw.copy()
    bad[0] ^= 1
    assert np.any(syndromes(bch15, bad))
