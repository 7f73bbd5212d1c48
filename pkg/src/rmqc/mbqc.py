"""Deterministic measurement-based computation: instances, runs, truth tables.

An instance bundles a phase-coset resource state, the measurement angles, and
the mod-2 processing matrices Q (input -> basis choices), Z (outcomes ->
output parities) and T (temporal order).  Evaluation is supported for flat
temporal order T = 0 only, where basis choices depend on nothing but the
input; a nonzero T is stored but rejected loudly at run time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import _batch
from ._budget import check_budget
from .boolfn import TruthTable
from .gf2 import BinMatrix, BitVec, echelon_words, mat_apply_vec, rank_words, span_array
from .phasestate import (
    AngleSpec,
    CorrelationContext,
    CyclotomicSum,
    ExtremalResult,
    PhaseCosetState,
    expectation,
    extremal_bit,
    state_from_dict,
    state_to_dict,
)

__all__ = [
    "MBQCInstance",
    "RunResult",
    "AdmissibleResult",
    "DeterminismViolation",
    "run",
    "truth_table",
    "admissible_inputs",
    "example1_instance",
    "instance_to_dict",
    "instance_from_dict",
]


class DeterminismViolation(Exception):
    """Some correlation expectation is not +-1; carries the exact histogram."""

    def __init__(
        self,
        input_vec: BitVec,
        row: int,
        context: CorrelationContext,
        histogram: CyclotomicSum,
    ) -> None:
        super().__init__(
            f"non-extremal expectation at input {input_vec} output row {row}: "
            f"exponent histogram {dict(enumerate(histogram.counts))}"
        )
        self.input_vec = input_vec
        self.row = row
        self.context = context
        self.histogram = histogram


@dataclass(frozen=True)
class MBQCInstance:
    """Resource state, angles, and the (Q, Z, T) mod-2 processing relations."""

    state: PhaseCosetState
    angles: AngleSpec
    q_matrix: BinMatrix  # n x n_inputs
    z_matrix: BinMatrix  # n_outputs x n
    t_matrix: BinMatrix  # n x n

    def __post_init__(self) -> None:
        n = self.state.n
        if self.angles.n != n:
            raise ValueError("angle count differs from qubit count")
        if self.q_matrix.n_rows != n:
            raise ValueError("Q must have one row per qubit")
        if self.z_matrix.n_cols != n:
            raise ValueError("Z rows must have one column per qubit")
        if self.t_matrix.n_rows != n or self.t_matrix.n_cols != n:
            raise ValueError("T must be n x n")
        rows = self.t_matrix.rows
        for k in range(n):
            for l in range(k, n):
                if rows[k][l] and rows[l][k]:
                    raise ValueError(f"T[{k}][{l}] and T[{l}][{k}] both set: no ordering")

    @property
    def n(self) -> int:
        return self.state.n

    @property
    def n_inputs(self) -> int:
        return self.q_matrix.n_cols

    @property
    def n_outputs(self) -> int:
        return self.z_matrix.n_rows

    @property
    def is_flat(self) -> bool:
        return self.t_matrix.is_zero()


@dataclass(frozen=True)
class RunResult:
    """Basis choices and the per-output-row extremality classification."""

    q: BitVec
    bits: Tuple[ExtremalResult, ...]

    @property
    def deterministic(self) -> bool:
        return all(b.is_extremal for b in self.bits)

    @property
    def output(self) -> Optional[BitVec]:
        if not self.deterministic:
            return None
        w = 0
        for r, b in enumerate(self.bits):
            w |= b.bit << r
        return BitVec(len(self.bits), w)


def _require_flat(inst: MBQCInstance) -> None:
    if not inst.is_flat:
        raise ValueError(
            "evaluation requires flat temporal order (T = 0); adaptive bases "
            "are stored but not evaluated"
        )


def run(inst: MBQCInstance, i: BitVec) -> RunResult:
    """Single evaluation: q = Qi, then one extremality check per output row."""
    _require_flat(inst)
    if i.n != inst.n_inputs:
        raise ValueError(f"input length {i.n}, expected {inst.n_inputs}")
    q = mat_apply_vec(inst.q_matrix, i)
    bits = tuple(
        extremal_bit(expectation(inst.state, inst.angles, CorrelationContext(z, q)))
        for z in inst.z_matrix.rows
    )
    return RunResult(q, bits)


def _input_q_words(inst: MBQCInstance) -> np.ndarray:
    """q = Qi for every input integer i, as uint64, indexed by i."""
    cols = inst.q_matrix.transpose().row_words()
    return span_array(cols, inst.n)


def _first_violation(
    inst: MBQCInstance, status: np.ndarray, q_words: np.ndarray
) -> DeterminismViolation:
    bad = np.argwhere(status >= _batch.NON_EXTREMAL)
    i_idx, row = min((int(i), int(r)) for r, i in bad)
    i_vec = BitVec(inst.n_inputs, i_idx)
    q = BitVec(inst.n, int(q_words[i_idx]))
    ctx = CorrelationContext(inst.z_matrix.rows[row], q)
    hist = expectation(inst.state, inst.angles, ctx)
    return DeterminismViolation(i_vec, row, ctx, hist)


def truth_table(inst: MBQCInstance) -> TruthTable:
    """Outputs for every input; raises DeterminismViolation on any split histogram."""
    _require_flat(inst)
    n_in, n_out = inst.n_inputs, inst.n_outputs
    if n_in > 24:
        raise ValueError(f"truth table over 2^{n_in} inputs is not desk-scale")
    check_budget((1 << n_in) * max(n_out, 1) * inst.state.size, "truth_table input scan")
    if _batch.supports_fast_path(inst.state, inst.angles):
        q_words = _input_q_words(inst)
        out_words = np.zeros(1 << n_in, dtype=np.int64)
        status_rows = []
        for r, z in enumerate(inst.z_matrix.rows):
            if not inst.state.contains(z):
                i_vec = BitVec.zeros(n_in)
                ctx = CorrelationContext(z, BitVec(inst.n, int(q_words[0])))
                raise DeterminismViolation(
                    i_vec, r, ctx, expectation(inst.state, inst.angles, ctx)
                )
            status, _ = _batch.context_status(inst.state, inst.angles, z.word, q_words)
            status_rows.append(status)
            out_words |= status.astype(np.int64) << r
        all_status = np.stack(status_rows)
        if (all_status >= _batch.NON_EXTREMAL).any():
            raise _first_violation(inst, all_status, q_words)
        rows = tuple(BitVec(n_out, int(w)) for w in out_words)
        return TruthTable(n_in, n_out, rows)
    rows = []
    for x in range(1 << n_in):
        i_vec = BitVec(n_in, x)
        res = run(inst, i_vec)
        for r, b in enumerate(res.bits):
            if not b.is_extremal:
                ctx = CorrelationContext(inst.z_matrix.rows[r], res.q)
                raise DeterminismViolation(
                    i_vec, r, ctx, expectation(inst.state, inst.angles, ctx)
                )
        rows.append(res.output)
    return TruthTable(n_in, n_out, tuple(rows))


@dataclass(frozen=True)
class AdmissibleResult:
    """Basis-choice vectors with every output context extremal."""

    qs: Tuple[BitVec, ...]
    is_vector_space: bool

    def words(self) -> List[int]:
        return [q.word for q in self.qs]


def admissible_inputs(
    state: PhaseCosetState,
    angles: AngleSpec,
    z_matrix: BinMatrix,
    q_space: BinMatrix,
) -> AdmissibleResult:
    """All q in the span of ``q_space`` whose contexts are all extremal.

    Also reports whether the admissible set is closed under XOR, i.e. forms a
    vector space (required for the computed function to be total).
    """
    if z_matrix.n_cols != state.n or q_space.n_cols != state.n:
        raise ValueError("dimension mismatch")
    basis = [w for _, w in echelon_words(q_space.row_words())]
    size = 1 << len(basis)
    check_budget(size * max(z_matrix.n_rows, 1) * state.size, "admissible-input scan")
    if any(not state.contains(z) for z in z_matrix.rows):
        return AdmissibleResult((), False)
    if _batch.supports_fast_path(state, angles) and len(basis) <= 26:
        q_arr = span_array(basis, state.n)
        ok = np.ones(size, dtype=bool)
        for z in z_matrix.rows:
            status, _ = _batch.context_status(state, angles, z.word, q_arr)
            ok &= status <= _batch.BIT1
        words = sorted(int(w) for w in q_arr[ok])
    else:
        words = []
        for qw in (int(v) for v in _span_words_of(basis)):
            q = BitVec(state.n, qw)
            good = True
            for z in z_matrix.rows:
                res = extremal_bit(expectation(state, angles, CorrelationContext(z, q)))
                if not res.is_extremal:
                    good = False
                    break
            if good:
                words.append(qw)
        words.sort()
    is_space = bool(words) and len(words) == 1 << rank_words(words)
    return AdmissibleResult(tuple(BitVec(state.n, w) for w in words), is_space)


def _span_words_of(basis):
    from .gf2 import span_words

    return span_words(basis)


def example1_instance() -> MBQCInstance:
    """Four-qubit GHZ computation whose only output bit tests i1 = i2 = i3.

    Basis choices are (i1, i2, i3, i1+i2+i3); the output is the parity of all
    four outcomes.
    """
    from .phasestate import make_rm_state

    state = make_rm_state(0, 2)
    angles = AngleSpec.uniform(2, 4)
    q_matrix = BinMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    z_matrix = BinMatrix.from_rows([[1, 1, 1, 1]])
    t_matrix = BinMatrix.zeros(4, 4)
    return MBQCInstance(state, angles, q_matrix, z_matrix, t_matrix)


def instance_to_dict(inst: MBQCInstance) -> Dict[str, object]:
    return {
        "state": state_to_dict(inst.state),
        "angles": {"D": inst.angles.D, "numerators": list(inst.angles.numerators)},
        "Q": inst.q_matrix.to_lists(),
        "Z": inst.z_matrix.to_lists(),
        "T": inst.t_matrix.to_lists(),
    }


def instance_from_dict(data: Dict[str, object]) -> MBQCInstance:
    state = state_from_dict(data["state"])
    ang = data["angles"]
    angles = AngleSpec(int(ang["D"]), tuple(int(a) for a in ang["numerators"]))
    n = state.n

    def matrix(key: str, n_cols: int) -> BinMatrix:
        return BinMatrix.from_rows([BitVec.from_bits(r) for r in data[key]], n_cols=n_cols)

    q_rows = data["Q"]
    n_in = len(q_rows[0]) if q_rows else 0
    return MBQCInstance(state, angles, matrix("Q", n_in), matrix("Z", n), matrix("T", n))
