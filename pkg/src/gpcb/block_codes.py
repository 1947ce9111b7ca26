"""Systematic BCH and RS codes with bounded-distance hard-decision decoding.

Codeword layout is systematic-first: word[0..k) is the message, word[k..n)
the parity.  The polynomial view maps index idx to the coefficient of
x^(n-1-idx), so a valid word evaluated at alpha^1..alpha^2t gives zero
syndromes.

Decoding chain: syndromes -> Berlekamp-Massey -> Chien search -> Forney
(RS only; BCH errors are bit flips).  Bounded-distance semantics: inputs
beyond radius t return None or miscorrect to some other valid codeword,
never to an invalid word (syndromes are re-checked after correction).
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .galois import Field, minimal_polynomial, poly_mul, poly_mod, poly_trim


class InvalidParamsError(ValueError):
    pass


class IncompatiblePairError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


@dataclass
class CodeSpec:
    kind: str               # "bch" (binary) or "rs" (symbol)
    field: Field
    n: int
    k: int
    t: int
    d: int                  # design distance
    generator: list         # generator polynomial, lowest degree first
    symbol_bits: int        # m for RS, 1 for BCH
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def n_bits(self):
        return self.n * self.symbol_bits

    @property
    def k_bits(self):
        return self.k * self.symbol_bits

    def __repr__(self):
        return f"{self.kind.upper()}({self.n},{self.k},{self.d})"


def bch_spec(field: Field, t: int) -> CodeSpec:
    """Binary BCH code of length 2^m - 1 correcting t errors.

    Generator = lcm of the minimal polynomials of alpha^1 .. alpha^2t.
    """
    n = field.order
    if t < 1 or 2 * t >= n:
        raise InvalidParamsError(f"need 1 <= t and 2t < n, got t={t}, n={n}")
    g = [1]
    covered = set()
    for i in range(1, 2 * t + 1):
        e = field.alpha_pow(i)
        if e in covered:
            continue
        # mark the whole conjugacy class of alpha^i
        c = e
        while c not in covered:
            covered.add(c)
            c = field.mul(c, c)
        g = poly_mul(field, g, minimal_polynomial(field, e))
    k = n - (len(g) - 1)
    if k <= 0:
        raise InvalidParamsError(f"BCH generator degree {len(g) - 1} >= n={n}")
    return CodeSpec(kind="bch", field=field, n=n, k=k, t=t, d=2 * t + 1,
                    generator=g, symbol_bits=1)


def rs_spec(field: Field, t: int) -> CodeSpec:
    """Narrow-sense Reed-Solomon code over GF(2^m): g = prod (x - alpha^i), i=1..2t."""
    n = field.order
    if t < 1 or 2 * t >= n:
        raise InvalidParamsError(f"need 1 <= t < n/2, got t={t}, n={n}")
    g = [1]
    for i in range(1, 2 * t + 1):
        g = poly_mul(field, g, [field.alpha_pow(i), 1])
    return CodeSpec(kind="rs", field=field, n=n, k=n - 2 * t, t=t, d=2 * t + 1,
                    generator=g, symbol_bits=field.m)


def pair_construction2(field: Field, t1: int):
    """BCH + RS pair with equal length and dimension (t2 = m*t1/2)."""
    m = field.m
    if (m * t1) % 2 != 0:
        raise IncompatiblePairError(f"m*t1 = {m * t1} is odd; no matching RS code")
    bch = bch_spec(field, t1)
    rs = rs_spec(field, m * t1 // 2)
    if bch.k != rs.k:
        raise IncompatiblePairError(
            f"dimensions differ: BCH k={bch.k} (generator degree "
            f"{len(bch.generator) - 1} < m*t1={m * t1}), RS k={rs.k}"
        )
    return bch, rs


def _encode_table(code: CodeSpec):
    """Cached remainders of x^(n-1-j) mod g, one row per message position."""
    tab = code._cache.get("encode_table")
    if tab is None:
        nk = code.n - code.k
        tab = np.zeros((code.k, nk), dtype=np.int64)
        for j in range(code.k):
            rem = poly_mod(code.field, [0] * (code.n - 1 - j) + [1], code.generator)
            for i, c in enumerate(rem):
                tab[j, nk - 1 - i] = c      # coeff of x^i -> parity index nk-1-i
        code._cache["encode_table"] = tab
    return tab


def encode_systematic(code: CodeSpec, message) -> np.ndarray:
    """Message followed by n-k parity symbols; the result divides the generator."""
    message = np.asarray(message, dtype=np.int64)
    if message.shape != (code.k,):
        raise LengthMismatchError(f"message length {message.shape} != k={code.k}")
    tab = _encode_table(code)
    parity = np.bitwise_xor.reduce(code.field.mul_vec(message[:, None], tab), axis=0)
    return np.concatenate([message, parity])


def _decode_tables(code: CodeSpec):
    """Cached power matrices for vectorized syndrome and Chien evaluation."""
    tab = code._cache.get("decode_tables")
    if tab is None:
        f = code.field
        n, t = code.n, code.t
        exps = np.arange(n - 1, -1, -1, dtype=np.int64)        # n-1-idx for idx=0..n-1
        i_vec = np.arange(1, 2 * t + 1, dtype=np.int64)
        synd_log = (i_vec[:, None] * exps[None, :]) % f.order
        synd_pow = f.exp[synd_log]
        l_vec = np.arange(0, t + 1, dtype=np.int64)
        chien_log = (-l_vec[:, None] * exps[None, :]) % f.order
        inv_loc_log = (-exps) % f.order                        # log of alpha^-(n-1-idx)
        tab = {"synd_pow": synd_pow, "synd_log": synd_log,
               "chien_log": chien_log, "inv_loc_log": inv_loc_log}
        code._cache["decode_tables"] = tab
    return tab


def syndromes(code: CodeSpec, word) -> np.ndarray:
    """S_i = W(alpha^i) for i = 1..2t."""
    word = np.asarray(word, dtype=np.int64)
    tab = _decode_tables(code)
    prod = code.field.mul_vec(word[None, :], tab["synd_pow"])
    return np.bitwise_xor.reduce(prod, axis=1)


def _berlekamp_massey(field: Field, S):
    """Error locator polynomial (lowest degree first) from syndromes."""
    exp, log, order = field._exp, field._log, field.order
    C = [1]
    B = [1]
    L = 0
    shift = 1
    b = 1
    for i, si in enumerate(S):
        d = si
        for j in range(1, min(L, len(C) - 1) + 1):
            cj = C[j]
            sj = S[i - j]
            if cj and sj:
                d ^= exp[log[cj] + log[sj]]
        if d == 0:
            shift += 1
            continue
        coef_log = (log[d] + order - log[b]) % order
        T = list(C)
        need = shift + len(B)
        if len(C) < need:
            C.extend([0] * (need - len(C)))
        for j, bj in enumerate(B):
            if bj:
                C[shift + j] ^= exp[coef_log + log[bj]]
        if 2 * L <= i:
            L = i + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    return poly_trim(C), L


def _poly_eval_many(field, poly, point_logs):
    """Evaluate poly (lowest first) at the points alpha^point_logs, vectorized."""
    vals = np.zeros(len(point_logs), dtype=np.int64)
    for j, c in enumerate(poly):
        if c:
            vals ^= field.exp[(field._log[c] + j * point_logs) % field.order]
    return vals


def _decode_with_syndromes(code: CodeSpec, word, S):
    """Shared decode core; `word` is modified only via a corrected copy.

    S is the syndrome vector, indexed S[i-1] = W(alpha^i).
    """
    f = code.field
    S = np.asarray(S, dtype=np.int64)
    if not S.any():
        return np.array(word, dtype=np.int64), 0
    lam, L = _berlekamp_massey(f, S.tolist())
    if L > code.t or len(lam) - 1 != L:
        return None
    tab = _decode_tables(code)
    # Chien: evaluate lambda at alpha^-(n-1-idx) for every position
    ev = np.zeros(code.n, dtype=np.int64)
    chien_log = tab["chien_log"]
    for l, c in enumerate(lam):
        if c:
            ev ^= f.exp[f._log[c] + chien_log[l]]
    err_idx = np.flatnonzero(ev == 0)
    if len(err_idx) != L:
        return None
    corrected = np.array(word, dtype=np.int64)
    if code.kind == "bch":
        corrected[err_idx] ^= 1
        mags = np.ones(len(err_idx), dtype=np.int64)
    else:
        # Forney: omega = S(x) * lambda(x) mod x^2t; e = omega(Xi^-1)/lambda'(Xi^-1)
        omega = [0] * (2 * code.t)
        for i, si in enumerate(S.tolist()):
            if si == 0:
                continue
            for j, lj in enumerate(lam):
                if i + j < 2 * code.t and lj:
                    omega[i + j] ^= f.mul(si, lj)
        omega = poly_trim(omega)
        lam_deriv = [lam[j] if j % 2 == 1 else 0 for j in range(1, len(lam))]
        x_inv_logs = tab["inv_loc_log"][err_idx]
        num = _poly_eval_many(f, omega, x_inv_logs)
        den = _poly_eval_many(f, lam_deriv, x_inv_logs)
        if np.any(den == 0) or np.any(num == 0):
            return None
        mags = f.exp[(f.log[num] - f.log[den]) % f.order]
        corrected[err_idx] ^= mags
    # guard: a bounded-distance output must be a valid codeword.  The
    # corrected syndromes follow incrementally from the error contributions.
    contrib = f.exp[f.log[mags][None, :] + tab["synd_log"][:, err_idx]]
    if (S ^ np.bitwise_xor.reduce(contrib, axis=1)).any():
        return None
    return corrected, L


def decode_bounded(code: CodeSpec, word):
    """Decode within radius t.  Returns (codeword, error_count) or None.

    Beyond radius t the decoder may return None or a valid codeword other
    than the transmitted one (miscorrection); callers filter by distance.
    """
    word = np.asarray(word, dtype=np.int64)
    if word.shape != (code.n,):
        raise LengthMismatchError(f"word length {word.shape} != n={code.n}")
    return _decode_with_syndromes(code, word, syndromes(code, word))


def is_codeword(code: CodeSpec, word) -> bool:
    return not np.any(syndromes(code, word))
