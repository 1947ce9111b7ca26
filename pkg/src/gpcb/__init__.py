"""Parallel concatenated block codes over BCH/RS components, decoded
iteratively with Chase-Pyndiah SISO component decoders, plus a BPSK/AWGN
Monte Carlo BER simulator."""

from .galois import Field
from .block_codes import CodeSpec, bch_spec, rs_spec, pair_construction2

__all__ = ["Field", "CodeSpec", "bch_spec", "rs_spec", "pair_construction2"]
