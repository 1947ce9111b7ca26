"""Parallel concatenation of two systematic block codes, and its iterative
two-decoder loop.

Construction 1 shares M sub-blocks of k symbols between the encoders through
a symbol interleaver.  Construction 2 pairs codes of equal length and
dimension over the same field (BCH+RS, or RS+RS): the message is a bit
stream, encoder 1 works on bits (or the binary image), the bit-interleaved
stream is regrouped m bits per symbol for the RS encoder.

Transmitted word = systematic part, then encoder-1 parity, then encoder-2
parity.  All decoding happens on the binary image in the normalized-LLR
domain.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .block_codes import CodeSpec, encode_systematic
from . import interleavers
from .chase_pyndiah import siso_decode


class IncompatibleCodesError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


# Default alpha/beta schedules for 8 iterations (16 half-iterations), drawn
# from the candidate value pools; re-tunable via simulator.tune_schedule.
# Alpha is capped at 0.4: with the beta-substitution fallback the extrinsic
# w = beta*c - r turns strongly negative on high-confidence bits, and large
# alpha lets that feedback flip converged frames (severe for t=2 BCH
# components, visible as a ~1e-3 error floor already at alpha 0.5).
DEFAULT_ALPHA = (0.0, 0.2, 0.25, 0.3, 0.35, 0.4, 0.4, 0.4,
                 0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4)
DEFAULT_BETA = (0.4, 0.5, 0.6, 0.65, 0.7, 0.75, 0.8, 0.8,
                0.85, 0.85, 0.87, 0.87, 0.9, 0.9, 0.9, 0.9)


@dataclass
class DecodeParams:
    iterations: int = 8
    alpha_schedule: tuple = DEFAULT_ALPHA
    beta_schedule: tuple = DEFAULT_BETA

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if len(self.alpha_schedule) < 2 * self.iterations:
            raise ValueError("alpha schedule shorter than 2*iterations")
        if len(self.beta_schedule) < 2 * self.iterations:
            raise ValueError("beta schedule shorter than 2*iterations")
        if not all(0.0 <= a <= 1.0 for a in self.alpha_schedule):
            raise ValueError("alpha values must lie in [0, 1]")
        if not all(0.0 < b <= 1.0 for b in self.beta_schedule):
            raise ValueError("beta values must lie in (0, 1]")


class GpcbSpec:
    """Two component codes + interleaver + block multiplier M.

    Construction "c1": message units are component symbols (bits for BCH
    pairs); the interleaver permutes the M*k message symbols.
    Construction "c2": message units are bits; the interleaver permutes the
    M*m*k message bits before symbol regrouping for encoder 2.
    """

    def __init__(self, code1: CodeSpec, code2: CodeSpec, m_blocks: int,
                 interleaver: interleavers.InterleaverSpec | None = None,
                 construction: str = "c1"):
        if code1.k != code2.k:
            raise IncompatibleCodesError(
                f"dimensions differ: {code1.k} vs {code2.k}")
        if construction not in ("c1", "c2"):
            raise ValueError(f"construction must be c1 or c2, got {construction!r}")
        if construction == "c1" and code1.symbol_bits != code2.symbol_bits:
            raise IncompatibleCodesError(
                "construction 1 needs a common symbol alphabet")
        if construction == "c2":
            if code1.n != code2.n or code1.field.m != code2.field.m:
                raise IncompatibleCodesError(
                    "construction 2 needs equal length codes over one field")
            if code2.kind != "rs":
                raise IncompatibleCodesError(
                    "construction 2 second code must be RS")
        if m_blocks < 1:
            raise ValueError("M must be >= 1")
        self.code1 = code1
        self.code2 = code2
        self.m_blocks = m_blocks
        self.construction = construction
        self.k = code1.k

        # bit-domain layout
        self.n_bits = m_blocks * code2.k_bits
        self.m1_blocks = self.n_bits // code1.k_bits
        if self.m1_blocks * code1.k_bits != self.n_bits:
            raise IncompatibleCodesError("encoder-1 blocks do not tile the message")
        self.p1_bits = self.m1_blocks * (code1.n_bits - code1.k_bits)
        self.p2_bits = m_blocks * (code2.n_bits - code2.k_bits)
        self.l_bits = self.n_bits + self.p1_bits + self.p2_bits

        # message size in construction units
        self.n_units = (m_blocks * self.k if construction == "c1" else self.n_bits)
        self.unit_bits = code1.symbol_bits if construction == "c1" else 1
        self.l_units = self.l_bits // self.unit_bits

        # Table-style label counts (symbols): (L, N) = (M*(n1+n2-k), M*k)
        self.label_length = m_blocks * (code1.n + code2.n - self.k)
        self.label_dim = m_blocks * self.k
        self.rate = Fraction(self.k, code1.n + code2.n - self.k)

        if interleaver is None:
            interleaver = interleavers.InterleaverSpec("random", self.n_units)
        if interleaver.size != self.n_units:
            raise IncompatibleCodesError(
                f"interleaver size {interleaver.size} != message units {self.n_units}")
        if interleaver.pattern in ("block", "diagonal", "helical") \
                and interleaver.rows is None and interleaver.cols is None:
            # natural sub-block geometry: one row per encoder-1 block
            interleaver = interleavers.InterleaverSpec(
                interleaver.pattern, interleaver.size, interleaver.seed,
                rows=self.n_units // self.k, cols=self.k)
        self.interleaver = interleaver
        self.perm = interleavers.build(interleaver)

        # bit-level view of the unit permutation
        if self.unit_bits == 1:
            self.bit_perm = self.perm.forward
        else:
            sb = self.unit_bits
            self.bit_perm = (self.perm.forward[:, None] * sb
                             + np.arange(sb)[None, :]).reshape(-1)
        self.bit_perm_inv = np.empty(self.n_bits, dtype=np.int64)
        self.bit_perm_inv[self.bit_perm] = np.arange(self.n_bits)

    def __repr__(self):
        family = {"bch": "BCH", "rs": "RS"}[self.code1.kind]
        if self.code1.kind != self.code2.kind:
            family = "BCH-RS"
        return f"GPCB-{family}({self.label_length},{self.label_dim})"

    # -- bit/unit conversions -------------------------------------------

    def message_units_to_bits(self, message):
        message = np.asarray(message, dtype=np.int64)
        if self.unit_bits == 1:
            return message.copy()
        sb = self.unit_bits
        return ((message[:, None] >> np.arange(sb)[None, :]) & 1).reshape(-1)

    def message_bits_to_units(self, bits):
        bits = np.asarray(bits, dtype=np.int64)
        if self.unit_bits == 1:
            return bits.copy()
        sb = self.unit_bits
        return bits.reshape(-1, sb) @ (1 << np.arange(sb)).astype(np.int64)

    def codeword_to_bits(self, word):
        """Encoded word (units) -> binary image of length l_bits."""
        word = np.asarray(word, dtype=np.int64)
        if self.construction == "c2":
            return word.copy()
        sb = self.unit_bits
        if sb == 1:
            return word.copy()
        return ((word[:, None] >> np.arange(sb)[None, :]) & 1).reshape(-1)


def gpcb_spec(code1, code2, m_blocks, interleaver=None, construction="c1"):
    return GpcbSpec(code1, code2, m_blocks, interleaver, construction)


def encode(spec: GpcbSpec, message) -> np.ndarray:
    """Systematic part, encoder-1 parities, encoder-2 parities (in that order)."""
    message = np.asarray(message, dtype=np.int64)
    if message.shape != (spec.n_units,):
        raise LengthMismatchError(
            f"message length {message.shape} != {spec.n_units}")
    c1, c2, k = spec.code1, spec.code2, spec.k

    if spec.construction == "c1":
        par1 = [encode_systematic(c1, blk)[k:]
                for blk in message.reshape(spec.m_blocks, k)]
        scrambled = interleavers.apply(spec.perm, message)
        par2 = [encode_systematic(c2, blk)[k:]
                for blk in scrambled.reshape(spec.m_blocks, k)]
        return np.concatenate([message] + par1 + par2)

    # construction 2: message is bits
    if c1.symbol_bits == 1:
        blocks1 = message.reshape(spec.m1_blocks, k)
    else:
        blocks1 = _pack_symbols_stream(c1, message).reshape(spec.m_blocks, k)
    par1_units = [encode_systematic(c1, blk)[k:] for blk in blocks1]
    par1_bits = np.concatenate([unpack_bits_stream(c1, p) for p in par1_units])

    scrambled = interleavers.apply(spec.perm, message)
    symbols = _pack_symbols_stream(c2, scrambled).reshape(spec.m_blocks, k)
    par2_units = [encode_systematic(c2, blk)[k:] for blk in symbols]
    par2_bits = np.concatenate([unpack_bits_stream(c2, p) for p in par2_units])
    return np.concatenate([message, par1_bits, par2_bits])


def _pack_symbols_stream(code, bits):
    """Bit stream -> symbols, m bits per symbol, bit f at weight 2^f."""
    m = code.symbol_bits
    if m == 1:
        return np.asarray(bits, dtype=np.int64)
    return np.asarray(bits, dtype=np.int64).reshape(-1, m) @ \
        (1 << np.arange(m)).astype(np.int64)


def unpack_bits_stream(code, symbols):
    symbols = np.asarray(symbols, dtype=np.int64)
    m = code.symbol_bits
    if m == 1:
        return symbols.copy()
    return ((symbols[:, None] >> np.arange(m)[None, :]) & 1).reshape(-1)


def decode_iterative(spec: GpcbSpec, channel_soft, params: DecodeParams):
    """Serial two-decoder loop with alpha-weighted extrinsic feedback.

    Decoder inputs combine the channel LLRs of the systematic segment with
    alpha * (peer extrinsic); parity LLRs are fed straight from the channel
    and never updated.  Returns (message_units, snapshots) where snapshots
    holds the systematic hard decision after every half-iteration.
    """
    channel_soft = np.asarray(channel_soft, dtype=float)
    if channel_soft.shape != (spec.l_bits,):
        raise LengthMismatchError(
            f"soft input length {channel_soft.shape} != {spec.l_bits}")
    if not np.all(np.isfinite(channel_soft)):
        raise ValueError("soft input must be finite")

    c1, c2 = spec.code1, spec.code2
    nb = spec.n_bits
    sys_ch = channel_soft[:nb]
    par1 = channel_soft[nb:nb + spec.p1_bits]
    par2 = channel_soft[nb + spec.p1_bits:]
    k1b, p1b = c1.k_bits, c1.n_bits - c1.k_bits
    k2b, p2b = c2.k_bits, c2.n_bits - c2.k_bits

    w1 = np.zeros(nb)
    w2 = np.zeros(nb)
    snapshots = []

    def snapshot(alpha):
        return (sys_ch + alpha * (w1 + w2) > 0).astype(np.int64)

    n_half = 2 * params.iterations
    for h in range(n_half):
        alpha = params.alpha_schedule[h]
        beta = params.beta_schedule[h]
        if h % 2 == 0:
            sys_in = sys_ch + alpha * w2
            for b in range(spec.m1_blocks):
                s = slice(b * k1b, (b + 1) * k1b)
                soft = np.concatenate([sys_in[s], par1[b * p1b:(b + 1) * p1b]])
                w1[s] = siso_decode(c1, soft, beta).extrinsic[:k1b]
        else:
            psys_in = (sys_ch + alpha * w1)[spec.bit_perm]
            pw2 = np.empty(nb)
            for b in range(spec.m_blocks):
                s = slice(b * k2b, (b + 1) * k2b)
                soft = np.concatenate([psys_in[s], par2[b * p2b:(b + 1) * p2b]])
                pw2[s] = siso_decode(c2, soft, beta).extrinsic[:k2b]
            w2[spec.bit_perm] = pw2
        # weight the fresh extrinsics with the alpha that would feed them next
        next_alpha = params.alpha_schedule[min(h + 1, n_half - 1)]
        snapshots.append(snapshot(next_alpha))

    return spec.message_bits_to_units(snapshots[-1]), snapshots
