"""The 35-qubit local-unitary pair and the AND protocol built on it.

Two stabilizer states share the same 6-dimensional support span; the second
differs by a quadratic sign pattern and equals the first conjugated by a
whole family of non-Clifford local Z-rotations (numerators e + a*k1 + b*k2
mod 8, units of pi/8).  Because the unitary is not unique, two classical bits
(a, b) can be loaded into the basis choices of a single measurement pass, and
the first output parity computes a AND b.

The constants are embedded in a generated module with a checksum; the
bundled fixture ``data/lulc_constants.txt`` plus ``tools/regen_lulc_constants.py``
regenerate it, since hand transcription is the dominant risk here.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .gf2 import BinMatrix, BitVec
from .phasestate import (
    AngleSpec,
    CorrelationContext,
    PhaseCosetState,
    expectation,
    extremal_bit,
)

__all__ = [
    "LULCData",
    "DataIntegrityError",
    "LUFamilyCheck",
    "load_data",
    "verify_lu_family",
    "v_split",
    "and_protocol",
    "eta_bits",
    "canonical_blob",
]

N_SITES = 35
N_GENERATORS = 6


class DataIntegrityError(RuntimeError):
    """Embedded constants fail their checksum or structural invariants."""


def canonical_blob(
    xi: Tuple[Tuple[int, ...], ...],
    quad: Tuple[Tuple[int, int], ...],
    e: Tuple[int, ...],
    k1: Tuple[int, ...],
    k2: Tuple[int, ...],
) -> bytes:
    """Canonical serialization the checksum is computed over."""
    parts = []
    for row in xi:
        parts.append("xi:" + ",".join(map(str, row)))
    parts.append("quad:" + ";".join(f"{a},{b}" for a, b in quad))
    for name, vec in (("e", e), ("k1", k1), ("k2", k2)):
        parts.append(f"{name}:" + ",".join(map(str, vec)))
    return "\n".join(parts).encode()


@dataclass(frozen=True)
class LULCData:
    xi: Tuple[BitVec, ...]
    quad: Tuple[Tuple[int, int], ...]
    e: Tuple[int, ...]
    k1: Tuple[int, ...]
    k2: Tuple[int, ...]
    phi1: PhaseCosetState
    phi2: PhaseCosetState


def load_data() -> LULCData:
    """Validate the embedded constants and build both states."""
    from . import _lulc_constants as _const  # generated module

    blob = canonical_blob(_const.XI, _const.QUAD_PAIRS, _const.E, _const.K1, _const.K2)
    digest = hashlib.sha256(blob).hexdigest()
    if digest != _const.SHA256:
        raise DataIntegrityError(
            f"constants checksum {digest} != recorded {_const.SHA256}; "
            "regenerate with tools/regen_lulc_constants.py"
        )
    xi = tuple(BitVec.from_bits(row) for row in _const.XI)
    for v in xi:
        if v.n != N_SITES:
            raise DataIntegrityError("generator row is not 35 sites long")
    if len(xi) != N_GENERATORS:
        raise DataIntegrityError("expected 6 generator rows")
    if any(len(vec) != N_SITES for vec in (_const.E, _const.K1, _const.K2)):
        raise DataIntegrityError("phase vector is not 35 sites long")
    if any(a % 2 == 0 for a in _const.E):
        raise DataIntegrityError("every e entry must be odd")
    if any(k % 2 for k in _const.K1 + _const.K2):
        raise DataIntegrityError("every k entry must be even")
    generators = BinMatrix.from_rows(xi)
    phi1 = PhaseCosetState(N_SITES, generators)
    phi2 = PhaseCosetState(N_SITES, generators, _const.QUAD_PAIRS)
    if phi1.k != N_GENERATORS:
        raise DataIntegrityError("generator rows are dependent")
    return LULCData(xi, _const.QUAD_PAIRS, _const.E, _const.K1, _const.K2, phi1, phi2)


@dataclass(frozen=True)
class LUFamilyCheck:
    """Truthy iff the phase pattern is globally constant over the span."""

    ok: bool
    first_violation: Optional[int] = None  # span element where the phase deviates

    def __bool__(self) -> bool:
        return self.ok


def verify_lu_family(a: int, b: int, data: Optional[LULCData] = None) -> LUFamilyCheck:
    """Exact check that the (a, b) member of the unitary family maps state 1 to state 2.

    With numerators eps = e + a*k1 + b*k2 mod 8, the per-basis-state phase
    exponent sum_j eps_j * (-1)^{x_j} + 8*Q(x) (units of pi/8, mod 16) must
    not depend on x; global phase is fixed by comparing against x = 0.
    """
    d = data or load_data()
    eps = [(d.e[j] + a * d.k1[j] + b * d.k2[j]) % 8 for j in range(N_SITES)]

    def exponent(x: int) -> int:
        s = 0
        for j in range(N_SITES):
            s += -eps[j] if (x >> j) & 1 else eps[j]
        return (s + 8 * d.phi2.quad_eval(x)) % 16

    reference = exponent(0)
    for x in d.phi2.span:
        if exponent(x) != reference:
            return LUFamilyCheck(False, first_violation=x)
    return LUFamilyCheck(True)


def v_split(e_j: int, k_j: int) -> Tuple[int, int]:
    """Split an even phase shift into a basis flip and a residual sign.

    Returns (q, v) with e_j + k_j = (-1)^q e_j + 4v mod 8, where q = k_j/2
    mod 2 and v = k_j*(e_j + k_j/2)/4 mod 2.
    """
    if not (0 <= e_j < 8 and e_j % 2 == 1):
        raise ValueError(f"e_j must be odd in [0, 8), got {e_j}")
    if not (0 <= k_j < 8 and k_j % 2 == 0):
        raise ValueError(f"k_j must be even in [0, 8), got {k_j}")
    q = (k_j // 2) % 2
    v = (k_j * (e_j + k_j // 2) // 4) % 2
    assert (e_j + k_j) % 8 == ((-1) ** q * e_j + 4 * v) % 8
    return q, v


def eta_bits(data: LULCData, k: Tuple[int, ...]) -> BitVec:
    """Predicted output bits: per generator row, the parity of the residual signs."""
    word = 0
    for l, xi in enumerate(data.xi):
        acc = 0
        for j in range(N_SITES):
            if xi[j]:
                acc ^= v_split(data.e[j], k[j])[1]
        word |= acc << l
    return BitVec(N_GENERATORS, word)


def and_protocol(a: int, b: int, data: Optional[LULCData] = None) -> BitVec:
    """Run the measurement protocol for input (a, b); output bit 0 is a AND b.

    Measures the six generator-row correlations on the quadratically-signed
    state at basis choices q = a*k1/2 + b*k2/2 mod 2, and cross-checks every
    engine-extracted bit against the residual-sign parity prediction.
    """
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("inputs must be bits")
    d = data or load_data()
    k = tuple((a * d.k1[j] + b * d.k2[j]) % 8 for j in range(N_SITES))
    q_word = 0
    for j in range(N_SITES):
        q_word |= ((k[j] // 2) % 2) << j
    q = BitVec(N_SITES, q_word)
    angles = AngleSpec(2, d.e)
    word = 0
    for l, xi in enumerate(d.xi):
        res = extremal_bit(expectation(d.phi2, angles, CorrelationContext(xi, q)))
        if not res.is_extremal:
            raise DataIntegrityError(
                f"output row {l} is not extremal at (a={a}, b={b}); constants corrupt"
            )
        word |= res.bit << l
    out = BitVec(N_GENERATORS, word)
    predicted = eta_bits(d, k)
    if out != predicted:
        raise DataIntegrityError(
            f"engine output {out} disagrees with residual-sign prediction {predicted}"
        )
    return out
