"""Dense statevector brute force for independent validation at small sizes.

Everything here is deliberately written against the raw definitions (complex
amplitudes, 2x2 observables, Born-rule collapse) rather than reusing the
exact integer engine, so the two paths can check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .gf2 import BitVec, mat_apply_vec
from .mbqc import MBQCInstance
from .phasestate import AngleSpec, CorrelationContext, PhaseCosetState

__all__ = ["DenseState", "dense_state", "dense_expectation", "sample_run"]

MAX_QUBITS = 20


@dataclass(frozen=True)
class DenseState:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError("amplitude count is not 2^n")
        norm = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm^2 = {norm}, not 1")


def _guard(n: int) -> None:
    if n > MAX_QUBITS:
        raise ValueError(f"dense path limited to {MAX_QUBITS} qubits, got {n}")


def dense_state(s: PhaseCosetState) -> DenseState:
    """Amplitude |S|^{-1/2} (-1)^{Q(x)+lin.x} on the span, 0 elsewhere."""
    _guard(s.n)
    amps = np.zeros(1 << s.n, dtype=np.complex128)
    scale = 1.0 / math.sqrt(s.size)
    for x in s.span:
        amps[x] = -scale if s.phase_bit(x) else scale
    return DenseState(s.n, amps)


def _apply_local(
    amps: np.ndarray, n: int, j: int, phi: float, q_j: int
) -> np.ndarray:
    """Apply cos(phi) X + (-1)^q sin(phi) Y at site j."""
    idx = np.arange(1 << n)
    bit = (idx >> j) & 1
    # <x|O|x^e_j> = exp(-i phi (-1)^{x_j + q_j})
    phase = np.exp(-1j * phi * ((-1.0) ** (bit ^ q_j)))
    return phase * amps[idx ^ (1 << j)]


def dense_expectation(
    st: DenseState, angles: AngleSpec, ctx: CorrelationContext
) -> complex:
    """<psi| tensor-product of X-Y-plane observables over the support |psi>."""
    _guard(st.n)
    if ctx.z.n != st.n or angles.n != st.n:
        raise ValueError("dimension mismatch")
    psi = st.amplitudes.copy()
    for j in range(st.n):
        if ctx.z[j]:
            psi = _apply_local(psi, st.n, j, angles.angle(j), ctx.q[j])
    return complex(np.vdot(st.amplitudes, psi))


def _measure_site(
    amps: np.ndarray, n: int, j: int, phi: float, q_j: int, rng: np.random.Generator
) -> Tuple[int, np.ndarray]:
    """Born-rule measurement of the site observable; returns (outcome bit, state)."""
    o_psi = _apply_local(amps, n, j, phi, q_j)
    plus = 0.5 * (amps + o_psi)
    p_plus = float(np.vdot(plus, plus).real)
    if rng.random() < p_plus:
        return 0, plus / math.sqrt(p_plus)
    minus = 0.5 * (amps - o_psi)
    return 1, minus / math.sqrt(float(np.vdot(minus, minus).real))


def sample_run(
    inst: MBQCInstance,
    i: BitVec,
    seed: int,
    trials: int,
    site_order: List[int] | None = None,
) -> List[Tuple[BitVec, BitVec]]:
    """Sequential single-site measurements with collapse, repeated ``trials`` times.

    Returns (s, o) per trial with o = Z s.  Raw outcomes s are random; for a
    deterministic instance the parities o agree across trials and seeds.
    Per-trial RNG streams are derived from (seed, trial) for reproducibility.
    """
    _guard(inst.n)
    if not inst.is_flat:
        raise ValueError("sampling requires flat temporal order (T = 0)")
    if i.n != inst.n_inputs:
        raise ValueError(f"input length {i.n}, expected {inst.n_inputs}")
    q = mat_apply_vec(inst.q_matrix, i)
    base = dense_state(inst.state).amplitudes
    order = list(range(inst.n)) if site_order is None else list(site_order)
    if sorted(order) != list(range(inst.n)):
        raise ValueError("site_order must be a permutation of all sites")
    results = []
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        psi = base.copy()
        s_word = 0
        for j in order:
            bit, psi = _measure_site(psi, inst.n, j, inst.angles.angle(j), q[j], rng)
            s_word |= bit << j
        s = BitVec(inst.n, s_word)
        o = mat_apply_vec(inst.z_matrix, s)
        results.append((s, o))
    return results
