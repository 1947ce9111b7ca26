"""Arithmetic in GF(2^m) via log/antilog tables, and polynomials over it.

Elements are plain Python ints in the polynomial basis (bit i = coefficient
of alpha^i).  Polynomials are lists of field elements, lowest degree first,
with no trailing zeros (the zero polynomial is the empty list).
"""

import numpy as np


class NonPrimitivePolyError(ValueError):
    """The supplied polynomial does not generate the full multiplicative group."""


# Conventional primitive polynomials, as integer bit masks (bit i = coeff of x^i).
DEFAULT_PRIMITIVE_POLYS = {
    2: 0b111,
    3: 0b1011,                  # x^3 + x + 1
    4: 0b10011,                 # x^4 + x + 1
    5: 0b100101,                # x^5 + x^2 + 1
    6: 0b1000011,               # x^6 + x + 1
    7: 0b10001001,              # x^7 + x^3 + 1
    8: 0b100011101,             # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,            # x^9 + x^4 + 1
    10: 0b10000001001,          # x^10 + x^3 + 1
    11: 0b100000000101,         # x^11 + x^2 + 1
    12: 0b1000001010011,        # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,       # x^13 + x^4 + x^3 + x + 1
    14: 0b100010000100011,      # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,     # x^15 + x + 1
    16: 0b10001000000001011,    # x^16 + x^12 + x^3 + x + 1
}


class Field:
    """GF(2^m) with exp/log tables for the generator alpha (the element 2).

    Immutable after construction; all operations are pure, so a Field may be
    shared freely between workers.
    """

    def __init__(self, m, primitive_poly=None):
        if not 2 <= m <= 16:
            raise ValueError(f"m must be in [2, 16], got {m}")
        if primitive_poly is None:
            primitive_poly = DEFAULT_PRIMITIVE_POLYS[m]
        if primitive_poly.bit_length() != m + 1:
            raise ValueError(
                f"primitive polynomial must have degree {m}, "
                f"got degree {primitive_poly.bit_length() - 1}"
            )
        self.m = m
        self.primitive_poly = primitive_poly
        self.order = (1 << m) - 1

        # exp table doubled so products of two logs never need a modulo.
        exp = np.zeros(2 * self.order, dtype=np.int64)
        log = np.zeros(self.order + 1, dtype=np.int64)
        seen = np.zeros(self.order + 1, dtype=bool)
        x = 1
        for i in range(self.order):
            if seen[x]:
                # powers of alpha cycled before covering all nonzero elements
                raise NonPrimitivePolyError(
                    f"poly {primitive_poly:#x} is not primitive over GF(2^{m})"
                )
            seen[x] = True
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & (1 << m):
                x ^= primitive_poly
        if x != 1:
            raise NonPrimitivePolyError(
                f"poly {primitive_poly:#x} is not primitive over GF(2^{m})"
            )
        exp[self.order:] = exp[:self.order]
        self.exp = exp
        self.log = log
        # plain-list mirrors: scalar indexing is much faster than numpy's
        self._exp = exp.tolist()
        self._log = log.tolist()

    def __repr__(self):
        return f"Field(m={self.m}, poly={self.primitive_poly:#x})"

    @staticmethod
    def add(a, b):
        """Addition = subtraction = bitwise XOR in characteristic 2."""
        return a ^ b

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^m)")
        return self._exp[self.order - self._log[a]]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return self._exp[(self._log[a] * e) % self.order]

    def alpha_pow(self, i):
        """alpha^i for any integer i."""
        return self._exp[i % self.order]

    def mul_vec(self, a, b):
        """Elementwise product of integer arrays (0 handled as absorbing)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)


# ---------------------------------------------------------------------------
# Polynomials over a Field: list of ints, lowest degree first, canonical form.

def poly_trim(p):
    i = len(p)
    while i > 0 and p[i - 1] == 0:
        i -= 1
    return list(p[:i])


def poly_degree(p):
    """Degree of canonical p; -1 stands in for -inf on the zero polynomial."""
    return len(p) - 1


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] ^= c
    return poly_trim(out)


def poly_mul(field, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] ^= field.mul(ai, bj)
    return poly_trim(out)


def poly_mod(field, a, b):
    """Remainder of a divided by b (b != 0)."""
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial modulo by zero")
    r = poly_trim(a)
    inv_lead = field.inv(b[-1])
    while len(r) >= len(b):
        shift = len(r) - len(b)
        factor = field.mul(r[-1], inv_lead)
        for i, bi in enumerate(b):
            r[shift + i] ^= field.mul(factor, bi)
        r = poly_trim(r)
    return r


def poly_eval(field, p, x):
    """Evaluate p at x (Horner)."""
    acc = 0
    for c in reversed(p):
        acc = field.mul(acc, x) ^ c
    return acc


def minimal_polynomial(field, e):
    """Monic polynomial over GF(2) of least degree with e as a root.

    Expands the product of (x - c) over the conjugacy class {e^(2^i)}.
    """
    if e == 0:
        raise ValueError("minimal polynomial of 0 is not defined here")
    conjugates = []
    c = e
    while True:
        conjugates.append(c)
        c = field.mul(c, c)
        if c == e:
            break
    p = [1]
    for c in conjugates:
        p = poly_mul(field, p, [c, 1])
    assert all(coeff in (0, 1) for coeff in p), "conjugate product not over GF(2)"
    return p
