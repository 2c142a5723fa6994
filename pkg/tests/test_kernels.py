"""Tests for the compiled kernel helpers: PRNG parity and bit tricks."""

from __future__ import annotations

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from colorclue import _kernels

u64 = st.integers(0, (1 << 64) - 1)


@given(u64)
def test_splitmix_python_matches_kernel_stream(seed):
    out = np.empty(16, dtype=np.uint64)
    state = np.array([seed], dtype=np.uint64)
    _kernels.splitmix64_stream(state, out)
    s = seed
    for i in range(16):
        s, draw = _kernels.splitmix64(s)
        assert int(out[i]) == draw


def test_splitmix_reference_vector():
    # Published splitmix64 outputs for seed 0 (e.g. the xoshiro reference
    # implementation's seeding sequence).
    s, expected = 0, [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
        0xF88BB8A8724C81EC,
        0x1B39896A51A8749B,
    ]
    for want in expected:
        s, draw = _kernels.splitmix64(s)
        assert draw == want


@given(u64)
def test_mix64_matches_single_step(x):
    _, draw = _kernels.splitmix64(x)
    assert _kernels.mix64(x) == draw


@given(u64)
def test_popcount(x):
    assert int(_kernels._popcount(np.uint64(x))) == bin(x).count("1")


@given(st.integers(0, 63))
def test_bit_index_on_single_bits(i):
    assert int(_kernels._bit_index(np.uint64(1 << i))) == i


@given(u64, st.integers(1, 1000))
def test_rand_below_in_range(seed, n):
    state = np.array([seed], dtype=np.uint64)
    for _ in range(8):
        v = int(_kernels._rand_below(state, n))
        assert 0 <= v < n
