"""BPSK/AWGN channel model, Monte Carlo BER/FER estimation and the greedy
alpha/beta schedule tuner.

Reproducibility: each frame draws from its own counter-based Philox stream
keyed by (seed, frame index), so results are bit-identical across runs and
independent of any parallel frame ordering.  Error rates are counted over
information bits only.
"""

import csv
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .concatenation import GpcbSpec, DecodeParams, encode, decode_iterative

# Candidate value pools for the schedule tuner.
ALPHA_POOL = (0.0, 0.25, 0.3, 0.4, 0.5, 0.55, 0.6, 0.65,
              0.7, 0.75, 0.8, 0.85, 0.9, 0.92, 0.95)
BETA_POOL = (0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
             0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.87, 0.9)


@dataclass
class ChannelSpec:
    ebn0_db: float
    rate: float                 # information bits per channel bit
    seed: int = 0

    @property
    def sigma(self):
        """Noise std dev for unit-energy BPSK symbols."""
        return float(np.sqrt(1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0))))


@dataclass
class SimResult:
    """Per-iteration counters; index i = end of iteration i+1."""
    bit_errors: np.ndarray
    frame_errors: np.ndarray
    bits: int                   # information bits simulated (per iteration)
    frames: int
    seed: int
    config: dict = dc_field(default_factory=dict)
    wall_seconds: float = 0.0

    @property
    def ber(self):
        return self.bit_errors / self.bits

    @property
    def fer(self):
        return self.frame_errors / self.frames

    def rows(self):
        """CSV rows, one per iteration (schema shared with the plot tool)."""
        out = []
        for i in range(len(self.bit_errors)):
            out.append({
                "code": self.config.get("code", ""),
                "construction": self.config.get("construction", ""),
                "M": self.config.get("M", ""),
                "interleaver": self.config.get("interleaver", ""),
                "seed": self.seed,
                "ebn0_db": self.config.get("ebn0_db", ""),
                "iteration": i + 1,
                "bits": self.bits,
                "frames": self.frames,
                "bit_errors": int(self.bit_errors[i]),
                "frame_errors": int(self.frame_errors[i]),
                "ber": float(self.ber[i]),
                "fer": float(self.fer[i]),
            })
        return out


CSV_COLUMNS = ("code", "construction", "M", "interleaver", "seed", "ebn0_db",
               "iteration", "bits", "frames", "bit_errors", "frame_errors",
               "ber", "fer")


def write_csv(path, results):
    """Simulator output contract: header + one row per (ebn0_db, iteration)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for res in results:
            for row in res.rows():
                writer.writerow(_fmt(row[c]) for c in CSV_COLUMNS)


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def modulate(bits) -> np.ndarray:
    """Antipodal mapping, bit 1 -> +1.0."""
    return 2.0 * np.asarray(bits, dtype=float) - 1.0


def awgn(symbols, sigma, rng) -> np.ndarray:
    symbols = np.asarray(symbols, dtype=float)
    return symbols + rng.normal(0.0, sigma, size=symbols.shape)


def channel_llr(received) -> np.ndarray:
    """Normalized LLR: the channel sample itself."""
    return np.asarray(received, dtype=float).copy()


def frame_rng(seed, frame):
    """Independent per-frame stream; merging frames is order-free."""
    return np.random.Generator(np.random.Philox(key=[seed, frame]))


def run_ber(spec: GpcbSpec, params: DecodeParams, channel: ChannelSpec,
            min_frame_errors: int = 100, max_frames: int = 10 ** 6,
            progress=None) -> SimResult:
    """Monte Carlo loop: encode -> BPSK -> AWGN -> iterative decode -> count.

    Stops when the final iteration has accumulated min_frame_errors frame
    errors, or after max_frames.  Fully reproducible from channel.seed.
    """
    if min_frame_errors < 1:
        raise ValueError("min_frame_errors must be >= 1")
    t0 = time.monotonic()
    sigma = channel.sigma
    n_iter = params.iterations
    bit_errors = np.zeros(n_iter, dtype=np.int64)
    frame_errors = np.zeros(n_iter, dtype=np.int64)
    frames = 0
    while frames < max_frames and frame_errors[-1] < min_frame_errors:
        rng = frame_rng(channel.seed, frames)
        message = rng.integers(0, 1 << spec.unit_bits, spec.n_units)
        word_bits = spec.codeword_to_bits(encode(spec, message))
        received = awgn(modulate(word_bits), sigma, rng)
        _, snapshots = decode_iterative(spec, channel_llr(received), params)
        msg_bits = spec.message_units_to_bits(message)
        for i in range(n_iter):
            errs = int(np.count_nonzero(snapshots[2 * i + 1] != msg_bits))
            bit_errors[i] += errs
            frame_errors[i] += errs > 0
        frames += 1
        if progress is not None:
            progress(frames, bit_errors, frame_errors)
    return SimResult(
        bit_errors=bit_errors,
        frame_errors=frame_errors,
        bits=frames * spec.n_bits,
        frames=frames,
        seed=channel.seed,
        config={
            "code": repr(spec),
            "construction": spec.construction,
            "M": spec.m_blocks,
            "interleaver": spec.interleaver.pattern,
            "ebn0_db": channel.ebn0_db,
        },
        wall_seconds=time.monotonic() - t0,
    )


def run_uncoded_ber(ebn0_db, nbits, seed=0):
    """Uncoded BPSK reference (rate 1); sanity anchor for the channel model."""
    channel = ChannelSpec(ebn0_db=ebn0_db, rate=1.0, seed=seed)
    rng = frame_rng(seed, 0)
    bits = rng.integers(0, 2, nbits)
    received = awgn(modulate(bits), channel.sigma, rng)
    errors = int(np.count_nonzero((received > 0).astype(np.int64) != bits))
    return errors / nbits, errors


def tune_schedule(spec: GpcbSpec, channel: ChannelSpec, pools=None,
                  iterations: int = 8, min_frame_errors: int = 20,
                  max_frames: int = 200) -> DecodeParams:
    """Greedy per-iteration grid search over the alpha/beta pools.

    Grows the schedule one iteration at a time: grid alpha for the new
    iteration (both half-iterations), keep the best BER on a fixed-seed
    evaluation set, then grid beta; then one refinement back-pass over the
    same iteration before advancing.  Ties keep the earliest pool element.
    """
    alpha_pool, beta_pool = pools if pools is not None else (ALPHA_POOL, BETA_POOL)
    if not alpha_pool or not beta_pool:
        raise ValueError("pools must be non-empty")
    alphas: list = []
    betas: list = []

    def evaluate(n_iter, a_sched, b_sched):
        params = DecodeParams(iterations=n_iter,
                              alpha_schedule=tuple(a_sched),
                              beta_schedule=tuple(b_sched))
        res = run_ber(spec, params, channel,
                      min_frame_errors=min_frame_errors, max_frames=max_frames)
        return res.ber[-1]

    for it in range(1, iterations + 1):
        alphas.extend([alpha_pool[0]] * 2)
        betas.extend([beta_pool[0]] * 2)

        def grid(pool, sched):
            best_v, best_ber = None, None
            for v in pool:
                sched[-2:] = [v, v]
                ber = evaluate(it, alphas, betas)
                if best_ber is None or ber < best_ber:
                    best_v, best_ber = v, ber
            sched[-2:] = [best_v, best_v]

        grid(alpha_pool, alphas)
        grid(beta_pool, betas)
        # refinement back-pass on the same iteration
        grid(alpha_pool, alphas)
        grid(beta_pool, betas)

    return DecodeParams(iterations=iterations,
                        alpha_schedule=tuple(alphas),
                        beta_schedule=tuple(betas))
