"""Chase-Pyndiah soft-input/soft-output component decoder.

Works entirely in the normalized-LLR domain: the channel sample itself is the
soft input, sigma never appears.  Signs encode hard decisions (positive =
bit 1, antipodal +1), magnitudes encode reliability.

Candidate generation is Chase-2 over the five least reliable bit positions
(18 test sequences); the decision is the Euclidean-nearest candidate; the
per-bit soft output uses the competing-candidate distance difference, with a
beta fallback where no competitor exists.  For RS codes the decoder flips
bits of the binary image and regroups m bits per symbol before algebraic
decoding.
"""

from dataclasses import dataclass

import numpy as np

from .block_codes import CodeSpec, syndromes, _decode_tables, _decode_with_syndromes


class EmptyCandidateSetError(Exception):
    """All test sequences failed to decode algebraically."""


# Test sequences over the least-reliable positions I1..I5 (0-based below):
# Y^0 is the plain hard decision, the rest flip the listed positions.
_PATTERNS_5 = (
    (), (0,), (1,), (0, 1), (2,), (0, 2), (3,), (1, 2), (0, 3),
    (0, 1, 2), (0, 4), (1, 2, 3), (0, 1, 2, 3), (0, 2, 4), (0, 1, 3, 4),
    (0, 2, 3, 4), (1, 2, 3, 4), (0, 1, 2, 3, 4),
)


@dataclass
class SisoOutput:
    soft_out: np.ndarray        # r' per bit
    extrinsic: np.ndarray       # w = r' - r, exact by construction
    decision: np.ndarray        # hard bits (0/1) of the selected codeword
    competitor_found: np.ndarray  # per-bit: distance form (True) or beta fallback
    candidate_count: int


def test_patterns(count: int = 5):
    """Flip sets over the `count` least-reliable positions.

    count == 5 gives the canonical 18-sequence list; smaller counts keep the
    subsets that fit (deduplicated), for codes too short for 5 positions.
    """
    if count == 5:
        return [frozenset(p) for p in _PATTERNS_5]
    if not 1 <= count < 5:
        raise ValueError(f"count must be in [1, 5], got {count}")
    seen = []
    for p in _PATTERNS_5:
        fp = frozenset(i for i in p if i < count)
        if fp not in seen:
            seen.append(fp)
    return seen


def least_reliable(soft_in, count: int = 5):
    """Indices of the `count` smallest |value|, ascending; ties to lower index."""
    mags = np.abs(np.asarray(soft_in, dtype=float))
    return np.argsort(mags, kind="stable")[:count]


def _pack_symbols(code: CodeSpec, bits):
    """Binary image -> symbols; bit f of symbol j sits at index j*m + f."""
    if code.symbol_bits == 1:
        return np.asarray(bits, dtype=np.int64)
    m = code.symbol_bits
    weights = (1 << np.arange(m)).astype(np.int64)
    return np.asarray(bits, dtype=np.int64).reshape(code.n, m) @ weights


def unpack_bits(code: CodeSpec, word):
    """Symbols -> binary image (inverse of _pack_symbols)."""
    word = np.asarray(word, dtype=np.int64)
    if code.symbol_bits == 1:
        return word.copy()
    m = code.symbol_bits
    return ((word[:, None] >> np.arange(m)[None, :]) & 1).reshape(-1)


def _candidate_words(code: CodeSpec, hard_bits, lrp):
    """Distinct codewords reached by algebraic decoding of the test sequences.

    Syndromes are computed once for the hard decision and adjusted
    incrementally per flipped position.
    """
    field = code.field
    tab = _decode_tables(code)
    synd_log = tab["synd_log"]
    base_word = _pack_symbols(code, hard_bits)
    base_synd = syndromes(code, base_word)
    m = code.symbol_bits
    out = []
    seen = set()
    for pattern in test_patterns(len(lrp)):
        word = base_word
        synd = base_synd
        if pattern:
            word = base_word.copy()
            synd = base_synd.copy()
            for i in pattern:
                bit = int(lrp[i])
                j, f = divmod(bit, m)
                word[j] ^= 1 << f
                synd ^= field.exp[field._log[1 << f] + synd_log[:, j]]
        res = _decode_with_syndromes(code, word, synd)
        if res is None:
            continue
        key = res[0].tobytes()
        if key not in seen:
            seen.add(key)
            out.append(res[0])
    return out


def chase_candidates(code: CodeSpec, soft_in, count: int = 5):
    """Set of codewords in the vicinity of the received vector.

    Raises EmptyCandidateSetError when every test sequence fails; callers
    fall back to the hard decision.
    """
    soft_in = np.asarray(soft_in, dtype=float)
    if soft_in.shape != (code.n_bits,):
        raise ValueError(f"soft input length {soft_in.shape} != {code.n_bits}")
    hard = (soft_in > 0).astype(np.int64)
    lrp = least_reliable(soft_in, min(count, code.n_bits))
    words = _candidate_words(code, hard, lrp)
    if not words:
        raise EmptyCandidateSetError("all test sequences failed to decode")
    return words


def siso_decode(code: CodeSpec, soft_in, beta: float, count: int = 5) -> SisoOutput:
    """One Chase-Pyndiah pass: decision, soft output and extrinsic values."""
    if beta <= 0:
        raise ValueError("beta must be > 0")
    soft_in = np.asarray(soft_in, dtype=float)
    if soft_in.shape != (code.n_bits,):
        raise ValueError(f"soft input length {soft_in.shape} != {code.n_bits}")
    hard = (soft_in > 0).astype(np.int64)
    lrp = least_reliable(soft_in, min(count, code.n_bits))
    words = _candidate_words(code, hard, lrp)

    if not words:
        # total fallback: keep the hard decision, assert beta confidence
        c_dec = 2.0 * hard - 1.0
        soft_out = beta * c_dec
        return SisoOutput(
            soft_out=soft_out,
            extrinsic=soft_out - soft_in,
            decision=hard,
            competitor_found=np.zeros(code.n_bits, dtype=bool),
            candidate_count=0,
        )

    bits = np.stack([unpack_bits(code, w) for w in words])
    chips = 2.0 * bits - 1.0
    metrics = np.sum((soft_in[None, :] - chips) ** 2, axis=1)
    best = int(np.argmin(metrics))
    m_dec = metrics[best]
    dec_bits = bits[best]
    c_dec = chips[best]

    opposite = bits != dec_bits[None, :]
    comp = np.where(opposite, metrics[:, None], np.inf).min(axis=0)
    found = np.isfinite(comp)
    soft_out = np.where(found, (comp - m_dec) / 4.0 * c_dec, beta * c_dec)
    return SisoOutput(
        soft_out=soft_out,
        extrinsic=soft_out - soft_in,
        decision=dec_bits,
        competitor_found=found,
        candidate_count=len(words),
    )
