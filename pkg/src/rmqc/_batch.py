"""Vectorized extremality scans over many basis-choice vectors at once.

Applies only to quad-free states with uniform odd numerators on at most 64
qubits; the general engine in ``phasestate`` is the reference path.  For a
support z and a batch of q vectors, each span element x contributes exponent
a*(|z| - 2*popcount((x^q)&z)) + 2^D*lin_z mod 2^(D+1); the expectation is
extremal exactly when popcount((x^q)&z) mod 2^D is the same for every x.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .gf2 import popcount_u64
from .phasestate import AngleSpec, PhaseCosetState

# status codes per q
BIT0 = 0
BIT1 = 1
NON_EXTREMAL = 2
NON_REAL = 3

_CHUNK = 1 << 13


def supports_fast_path(state: PhaseCosetState, angles: AngleSpec) -> bool:
    return not state.quad and angles.is_uniform() and state.n <= 64


def context_status(
    state: PhaseCosetState,
    angles: AngleSpec,
    z_word: int,
    q_arr: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray]:
    """Status code and representative exponent per q (q outside-span unchecked).

    Caller guarantees z lies in the span and ``supports_fast_path`` holds.
    Returns (status int8 array, exponent int64 array); the exponent is only
    meaningful where the histogram is single-exponent (status != NON_EXTREMAL).
    """
    d = angles.D
    half = 1 << d
    modulus = half << 1
    a = angles.numerators[0] if angles.numerators else 1
    z_u64 = np.uint64(z_word)
    z_weight = z_word.bit_count()
    lin_z = (state.lin.word & z_word).bit_count() & 1
    span = state.span_u64
    status = np.empty(len(q_arr), dtype=np.int8)
    exponent = np.empty(len(q_arr), dtype=np.int64)
    for lo in range(0, len(q_arr), _CHUNK):
        q_chunk = q_arr[lo : lo + _CHUNK]
        w = popcount_u64((span[:, None] ^ q_chunk[None, :]) & z_u64).astype(np.int64)
        const = np.all(w % half == w[0] % half, axis=0)
        e = (a * (z_weight - 2 * w[0]) + half * lin_z) % modulus
        st = np.full(len(q_chunk), NON_REAL, dtype=np.int8)
        st[e == 0] = BIT0
        st[e == half] = BIT1
        st[~const] = NON_EXTREMAL
        status[lo : lo + _CHUNK] = st
        exponent[lo : lo + _CHUNK] = e
    return status, exponent
