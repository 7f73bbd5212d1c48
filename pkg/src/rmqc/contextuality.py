"""Non-contextual hidden-variable models as GF(2) feasibility.

For a deterministic computation, a non-contextual value assignment reduces to
one pair of bits (c_j, d_j) per qubit with outcome c_j + d_j q_j, so each
measured context (z, q, o) imposes the linear relation

    sum_{j: z_j = 1} (c_j + d_j q_j) = o  (mod 2).

A model exists iff the stacked system is solvable; an infeasibility
certificate is a set of context rows whose coefficients cancel while the
parities sum to 1 -- a parity-contradiction witness in the style of the
GHZ argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .gf2 import BitVec, solve_words
from .mbqc import MBQCInstance, _input_q_words, truth_table

__all__ = [
    "HVMContext",
    "HVMSystem",
    "ContextualityVerdict",
    "build_system",
    "decide",
    "analyze_instance",
    "mermin_witness",
]


@dataclass(frozen=True)
class HVMContext:
    """One measured context: support z, basis choices q, observed parity o."""

    z: BitVec
    q: BitVec
    parity: int

    def coefficient_word(self, n: int) -> int:
        """Row over unknowns (c_1..c_n, d_1..d_n): c-support z, d-support z&q."""
        return self.z.word | ((self.z.word & self.q.word) << n)


@dataclass(frozen=True)
class HVMSystem:
    n: int
    contexts: Tuple[HVMContext, ...]

    def __post_init__(self) -> None:
        for ctx in self.contexts:
            if ctx.z.n != self.n or ctx.q.n != self.n:
                raise ValueError("context length differs from qubit count")


@dataclass(frozen=True)
class ContextualityVerdict:
    """Either a satisfying (c, d) assignment or a parity-contradiction witness."""

    kind: str  # "hvm_exists" | "contextual"
    assignment: Optional[Tuple[BitVec, BitVec]] = None
    witness_rows: Optional[Tuple[int, ...]] = None
    witness: Optional[Tuple[HVMContext, ...]] = None

    HVM_EXISTS = "hvm_exists"
    CONTEXTUAL = "contextual"

    @property
    def contextual(self) -> bool:
        return self.kind == self.CONTEXTUAL


def build_system(
    n: int, contexts: Iterable[Tuple[BitVec, BitVec, int]]
) -> HVMSystem:
    """One relation per measured context."""
    return HVMSystem(n, tuple(HVMContext(z, q, o & 1) for z, q, o in contexts))


def _validate_witness(n: int, rows: Sequence[HVMContext]) -> None:
    acc = 0
    par = 0
    for ctx in rows:
        acc ^= ctx.coefficient_word(n)
        par ^= ctx.parity
    if acc != 0 or par != 1:
        raise AssertionError("witness rows do not XOR to the contradiction 0 = 1")


def _assignment_satisfies(n: int, c: BitVec, d: BitVec, ctx: HVMContext) -> bool:
    lhs = (ctx.z.word & c.word).bit_count()
    lhs += (ctx.z.word & ctx.q.word & d.word).bit_count()
    return lhs & 1 == ctx.parity


def _left_null_basis(words: List[int]) -> List[int]:
    """Provenance masks y (over row indices) with sum of selected rows = 0."""
    basis: List[Tuple[int, int, int]] = []  # (pivot, reduced_word, provenance)
    null: List[int] = []
    for i, w in enumerate(words):
        prov = 1 << i
        for piv, bw, bprov in basis:
            if (w >> piv) & 1:
                w ^= bw
                prov ^= bprov
        if w == 0:
            null.append(prov)
            continue
        piv = (w & -w).bit_length() - 1
        basis = [
            (p, bw ^ w, bprov ^ prov) if (bw >> piv) & 1 else (p, bw, bprov)
            for p, bw, bprov in basis
        ]
        basis.append((piv, w, prov))
    return null


_MINIMIZE_MAX_ROWS = 512
_MINIMIZE_MAX_DIM = 20


def _minimized_certificate(words: List[int], parities: List[int], cert: int) -> int:
    """Lowest-weight odd-parity certificate reachable from the found one.

    The certificates form the odd-parity coset of the left null space.
    Exhaustive over that coset for small systems; otherwise greedy descent
    over the even-parity subspace.  Best effort only: a readable witness is
    wanted, not the (hard) true minimum.
    """

    def parity_of(mask: int) -> int:
        acc = 0
        m = mask
        while m:
            low = m & -m
            acc ^= parities[low.bit_length() - 1]
            m ^= low
        return acc

    null = _left_null_basis(words)
    odd = [y for y in null if parity_of(y)]
    anchor = min(odd + [cert], key=lambda v: v.bit_count()) if odd else cert
    even = [y for y in null if not parity_of(y)]
    even += [anchor ^ y for y in odd if y != anchor]
    if len(even) <= _MINIMIZE_MAX_DIM:
        best = anchor
        for sel in range(1 << len(even)):
            y = anchor
            s = sel
            while s:
                low = s & -s
                y ^= even[low.bit_length() - 1]
                s ^= low
            if y.bit_count() < best.bit_count():
                best = y
        return best
    y = anchor
    improved = True
    while improved:
        improved = False
        for e in even:
            if (y ^ e).bit_count() < y.bit_count():
                y ^= e
                improved = True
    return y


def decide(system: HVMSystem) -> ContextualityVerdict:
    """GF(2) feasibility of the assignment system, with re-verified evidence."""
    n = system.n
    # duplicate relations change nothing; keep first occurrences
    unique: Dict[Tuple[int, int], int] = {}
    for idx, ctx in enumerate(system.contexts):
        key = (ctx.coefficient_word(n), ctx.parity)
        unique.setdefault(key, idx)
    words = [k[0] for k in unique]
    parities = [k[1] for k in unique]
    originals = list(unique.values())
    x, cert = solve_words(words, parities)
    if cert is not None:
        if len(words) <= _MINIMIZE_MAX_ROWS:
            cert = _minimized_certificate(words, parities, cert)
        rows = tuple(sorted(originals[j] for j in range(len(words)) if (cert >> j) & 1))
        witness = tuple(system.contexts[i] for i in rows)
        _validate_witness(n, witness)
        return ContextualityVerdict(
            ContextualityVerdict.CONTEXTUAL, witness_rows=rows, witness=witness
        )
    c = BitVec(n, x & ((1 << n) - 1))
    d = BitVec(n, x >> n)
    for ctx in system.contexts:
        if not _assignment_satisfies(n, c, d, ctx):
            raise AssertionError("solver returned a non-satisfying assignment")
    return ContextualityVerdict(ContextualityVerdict.HVM_EXISTS, assignment=(c, d))


def analyze_instance(inst: MBQCInstance) -> ContextualityVerdict:
    """Decide HVM existence for every context the instance can measure.

    Requires the instance to be deterministic (truth_table must succeed);
    contexts are all (output row, q = Q i) pairs over the full input space.
    Duplicate relations are merged before solving.
    """
    tt = truth_table(inst)
    q_words = _input_q_words(inst)
    n = inst.n
    # The relation imposed by (z, q, o) depends on q only through z & q (and o
    # is a function of z & q for these instances), so contexts sharing that
    # product collapse to one representative.
    seen: Dict[Tuple[int, int], Tuple[int, int]] = {}
    z_words = inst.z_matrix.row_words()
    for x in range(1 << inst.n_inputs):
        qw = int(q_words[x])
        out_w = tt.rows[x].word
        for r, zw in enumerate(z_words):
            key = (r, zw & qw)
            bit = (out_w >> r) & 1
            prev = seen.get(key)
            if prev is None:
                seen[key] = (qw, bit)
            elif prev[1] != bit:
                raise AssertionError("same context product with two different outputs")
    contexts = tuple(
        HVMContext(inst.z_matrix.rows[r], BitVec(n, qw), bit)
        for (r, _), (qw, bit) in seen.items()
    )
    return decide(HVMSystem(n, contexts))


def mermin_witness(verdict: ContextualityVerdict) -> List[Tuple[BitVec, BitVec, int]]:
    """Context rows of a contextual verdict, re-validated as a contradiction.

    Across the returned rows every c-unknown and every active d-unknown occurs
    an even number of times while the parities sum to 1.
    """
    if not verdict.contextual or verdict.witness is None:
        raise ValueError("verdict carries no contextuality witness")
    rows = verdict.witness
    if rows:
        _validate_witness(rows[0].z.n, rows)
    return [(ctx.z, ctx.q, ctx.parity) for ctx in rows]
