import numpy as np
import pytest

from gpcb.galois import Field
from gpcb.block_codes import bch_spec, rs_spec


@pytest.fixture(scope="session")
def gf8():
    return Field(3)


@pytest.fixture(scope="session")
def gf16():
    return Field(4)


@pytest.fixture(scope="session")
def gf64():
    return Field(6)


@pytest.fixture(scope="session")
def gf128():
    return Field(7)


@pytest.fixture(scope="session")
def gf256():
    return Field(8)


@pytest.fixture(scope="session")
def rs7(gf8):
    return rs_spec(gf8, 2)


@pytest.fixture(scope="session")
def bch15(gf16):
    return bch_spec(gf16, 2)


@pytest.fixture(scope="session")
def rs63(gf64):
    return rs_spec(gf64, 5)


@pytest.fixture(scope="session")
def bch63(gf64):
    return bch_spec(gf64, 2)


def random_error_pattern(rng, code, weight):
    """Additive error of given symbol weight for a CodeSpec."""
    e = np.zeros(code.n, dtype=np.int64)
    pos = rng.choice(code.n, size=weight, replace=False)
    for p in pos:
        e[p] = rng.integers(1, 1 << code.symbol_bits)
    return e
