"""Permutations placed between the two component encoders.

Six patterns are supported: random, block, diagonal, cyclic, helical and
berrou.  The paper sources for the non-random patterns name them without
pinning formulas, so the exact rules used here are declared conventions
(documented per builder below) and are config-visible.

The module is unit-agnostic: construction 1 permutes symbols, construction 2
permutes bits; callers choose what an index means.
"""

from dataclasses import dataclass

import numpy as np

PATTERNS = ("random", "block", "diagonal", "cyclic", "helical", "berrou")

# prime pool used by the berrou builder (CCSDS telemetry-coding heritage)
_BERROU_PRIMES = (31, 37, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83)


class BadGeometryError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


@dataclass
class InterleaverSpec:
    pattern: str
    size: int
    seed: int = 0
    rows: int | None = None     # block / diagonal / helical geometry
    cols: int | None = None
    shift: int | None = None    # cyclic only; default size // 2


@dataclass
class Permutation:
    forward: np.ndarray
    inverse: np.ndarray

    @property
    def size(self):
        return len(self.forward)


def _geometry(spec):
    rows, cols = spec.rows, spec.cols
    if rows is None and cols is None:
        # fall back to a near-square factorization
        r = int(np.sqrt(spec.size))
        while spec.size % r:
            r -= 1
        rows, cols = r, spec.size // r
    elif rows is None:
        rows = spec.size // cols
    elif cols is None:
        cols = spec.size // rows
    if rows * cols != spec.size:
        raise BadGeometryError(f"rows*cols = {rows}*{cols} != size {spec.size}")
    return rows, cols


def build(spec: InterleaverSpec) -> Permutation:
    """Materialize the permutation; deterministic for a fixed spec."""
    if spec.size < 1:
        raise ValueError("size must be >= 1")
    n = spec.size
    if spec.pattern == "random":
        # Fisher-Yates shuffle from a seeded PCG64 stream
        forward = np.random.default_rng(spec.seed).permutation(n)
    elif spec.pattern == "block":
        # write row-major, read column-major
        rows, cols = _geometry(spec)
        i = np.arange(n)
        forward = (i % rows) * cols + i // rows
    elif spec.pattern == "diagonal":
        # write row-major, read successive anti-diagonals r+c = const
        rows, cols = _geometry(spec)
        order = []
        for d in range(rows + cols - 1):
            for r in range(max(0, d - cols + 1), min(rows, d + 1)):
                order.append(r * cols + (d - r))
        forward = np.array(order)
    elif spec.pattern == "cyclic":
        s = spec.shift if spec.shift is not None else n // 2
        forward = (np.arange(n) + s) % n
    elif spec.pattern == "helical":
        # wrapping diagonals: one diagonal per start column, stepping +1/+1
        rows, cols = _geometry(spec)
        order = []
        for start in range(cols):
            for r in range(rows):
                order.append(r * cols + (start + r) % cols)
        forward = np.array(order)
    elif spec.pattern == "berrou":
        # algebraic pattern: coprime multiplier from a prime pool plus offset
        p = next((q for q in _BERROU_PRIMES if np.gcd(q, n) == 1), None)
        if p is None:
            raise BadGeometryError(f"no coprime multiplier for size {n}")
        forward = (p * np.arange(n) + n // 2) % n
    else:
        raise ValueError(f"unknown pattern {spec.pattern!r}")

    forward = np.asarray(forward, dtype=np.int64)
    inverse = np.empty(n, dtype=np.int64)
    inverse[forward] = np.arange(n)
    return Permutation(forward=forward, inverse=inverse)


def apply(p: Permutation, x):
    x = np.asarray(x)
    if len(x) != p.size:
        raise LengthMismatchError(f"length {len(x)} != permutation size {p.size}")
    return x[p.forward]


def invert(p: Permutation, x):
    x = np.asarray(x)
    if len(x) != p.size:
        raise LengthMismatchError(f"length {len(x)} != permutation size {p.size}")
    return x[p.inverse]
