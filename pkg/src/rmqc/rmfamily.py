"""The four-parameter family of Reed-Muller measurement-based computations.

A family member uses the R(r,m) resource state, uniform angle pi/2^chi, basis
choices ranging over R(t,m) (one input bit per basis monomial of degree <= t)
and one output bit per basis monomial of degree <= r.  The member is
deterministic exactly when

    |c q z| = 0 mod 2^(chi-1)   and   |c z| = 0 mod 2^chi

for all codewords c in R(r,m), q in R(t,m) and basis rows z, where juxtaposition
is the coordinate-wise product and |.| the integer weight; checking basis z
suffices because extremality is closed under support XOR.  When determinism
holds, each output bit has the closed form

    o_z(q) = ((|z q| mod 2^chi) / 2^(chi-1)) xor ((|z| mod 2^(chi+1)) / 2^chi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ._budget import check_budget
from .boolfn import TruthTable, is_linear
from .gf2 import BinMatrix, BitVec, popcount_u64, span_array, span_chunks, span_words
from .mbqc import MBQCInstance, admissible_inputs, run
from .phasestate import AngleSpec, make_rm_state
from .reedmuller import rm_basis, rm_dim

__all__ = [
    "FamilyParams",
    "CounterExample",
    "DeterminismResult",
    "PromiseViolation",
    "PhaseDiagramCell",
    "build",
    "determinism_exact",
    "sufficient_condition",
    "closed_form",
    "closed_form_table",
    "phase_diagram",
    "phase_diagram_csv",
    "example2_report",
    "m4_correspondence_report",
]

_HUNT_SEED = 0x52D1
_HUNT_SAMPLES = 256
_DIRECT_SCAN_BOUND = 1 << 27  # element-ops considered cheap enough to skip hunting


class PromiseViolation(Exception):
    """The closed-form divisions are not exact: the parameters are not deterministic."""


@dataclass(frozen=True)
class FamilyParams:
    r: int
    t: int
    m: int
    chi: int

    def __post_init__(self) -> None:
        if min(self.r, self.t, self.m) < 0:
            raise ValueError("parameters must be nonnegative")
        if self.chi < 1:
            raise ValueError("chi must be >= 1")
        if self.r > self.m:
            raise ValueError(f"r={self.r} exceeds m={self.m}")
        if self.t > self.m:
            raise ValueError(f"t={self.t} exceeds m={self.m}")


@dataclass(frozen=True)
class CounterExample:
    """Violating triple: weight(c&q&z) or weight(c&z) misses its modulus."""

    c: BitVec
    q: BitVec
    z: BitVec
    condition: str  # "weight_cz" or "weight_cqz"


@dataclass(frozen=True)
class DeterminismResult:
    deterministic: bool
    counterexample: Optional[CounterExample] = None


def build(p: FamilyParams) -> MBQCInstance:
    """Assemble the family member as a runnable instance."""
    state = make_rm_state(p.r, p.m)
    n = state.n
    angles = AngleSpec.uniform(p.chi, n)
    q_matrix = rm_basis(p.t, p.m).basis.transpose()  # n x dim R(t,m)
    z_matrix = rm_basis(p.r, p.m).basis
    return MBQCInstance(state, angles, q_matrix, z_matrix, BinMatrix.zeros(n, n))


def sufficient_condition(p: FamilyParams) -> bool:
    """Arithmetic sufficient test for deterministic nonlinear computation."""
    return p.chi >= 2 and (p.chi - 1) * (p.r + p.t) < p.m - p.r <= p.chi * p.t


# ---------------------------------------------------------------------------
# exact determinism decision


@lru_cache(maxsize=32)
def _basis_words(r: int, m: int) -> Tuple[int, ...]:
    return tuple(rm_basis(r, m).basis.row_words())


def _hunt_candidates(r: int, m: int, rng: np.random.Generator) -> List[int]:
    """Likely violating codewords: basis monomials, their small sums, random points.

    Weight-divisibility violations live on low-degree monomial combinations,
    so basis rows, pairwise and (capped) triple sums catch them in practice.
    """
    words = list(_basis_words(r, m))
    cands = list(words)
    k = len(words)
    for i in range(k):
        for j in range(i + 1, k):
            cands.append(words[i] ^ words[j])
    if math.comb(k, 3) <= 2048:
        for i in range(k):
            for j in range(i + 1, k):
                for l in range(j + 1, k):
                    cands.append(words[i] ^ words[j] ^ words[l])
    for _ in range(_HUNT_SAMPLES):
        w = 0
        for g in words:
            if rng.integers(0, 2):
                w ^= g
        cands.append(w)
    seen = set()
    out = []
    for w in cands:
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def _counterexample(p: FamilyParams, c: int, q: int, z: int, cond: str) -> DeterminismResult:
    n = 1 << p.m
    return DeterminismResult(
        False, CounterExample(BitVec(n, c), BitVec(n, q), BitVec(n, z), cond)
    )


def _hunt_cqz(p: FamilyParams, z_words: Sequence[int]) -> Optional[DeterminismResult]:
    """Cheap exact search for a |c q z| violation; None proves nothing."""
    mod = 1 << (p.chi - 1)
    rng = np.random.default_rng(_HUNT_SEED)
    c_cands = _hunt_candidates(p.r, p.m, rng)
    q_cands = _hunt_candidates(p.t, p.m, rng)
    q_arr = np.array(q_cands, dtype=np.uint64)
    block = 256
    for z in z_words:
        zu = np.uint64(z)
        for lo in range(0, len(c_cands), block):
            c_arr = np.array(c_cands[lo : lo + block], dtype=np.uint64) & zu
            w = popcount_u64(c_arr[:, None] & q_arr[None, :])
            bad = np.argwhere(w % mod)
            if bad.size:
                ci, qi = (int(v) for v in bad[0])
                return _counterexample(p, c_cands[lo + ci], q_cands[qi], z, "weight_cqz")
    return None


def _verify_weight_cz(p: FamilyParams, z_words: Sequence[int]) -> Optional[DeterminismResult]:
    """Exhaustive |c z| = 0 mod 2^chi over the full R(r,m) span."""
    mod = 1 << p.chi
    if mod == 2:
        # parity of c & z is linear in c: basis rows decide the full span
        for z in z_words:
            for c in _basis_words(p.r, p.m):
                if (c & z).bit_count() & 1:
                    return _counterexample(p, c, 0, z, "weight_cz")
        return None
    dim = rm_dim(p.r, p.m)
    check_budget((1 << dim) * len(z_words), f"determinism weight_cz scan for {p}")
    basis = _basis_words(p.r, p.m)
    n = 1 << p.m
    for chunk in span_chunks(basis, n):
        for z in z_words:
            w = popcount_u64(chunk & np.uint64(z)).astype(np.int64)
            bad = np.nonzero(w % mod)[0]
            if bad.size:
                return _counterexample(p, int(chunk[int(bad[0])]), 0, z, "weight_cz")
    return None


def _scan_weight_cqz(p: FamilyParams, z_words: Sequence[int]) -> Optional[DeterminismResult]:
    """Full double-span |c q z| scan (the expensive exact path)."""
    mod = 1 << (p.chi - 1)
    c_basis = _basis_words(p.r, p.m)
    q_basis = _basis_words(p.t, p.m)
    dim_c, dim_q = rm_dim(p.r, p.m), rm_dim(p.t, p.m)
    check_budget(
        (1 << (dim_c + dim_q)) * len(z_words), f"determinism weight_cqz scan for {p}"
    )
    n = 1 << p.m
    # iterate the smaller span in Python, sweep the larger with numpy
    if dim_c <= dim_q:
        outer_basis, inner_basis, outer_is_c = c_basis, q_basis, True
    else:
        outer_basis, inner_basis, outer_is_c = q_basis, c_basis, False
    for outer in span_words(outer_basis):
        for z in z_words:
            mask = outer & z
            if mask == 0:
                continue
            for chunk in span_chunks(inner_basis, n):
                w = popcount_u64(chunk & np.uint64(mask)).astype(np.int64)
                bad = np.nonzero(w % mod)[0]
                if bad.size:
                    inner = int(chunk[int(bad[0])])
                    c, q = (outer, inner) if outer_is_c else (inner, outer)
                    return _counterexample(p, c, q, z, "weight_cqz")
    return None


def _verify_weight_cqz(p: FamilyParams, z_words: Sequence[int]) -> Optional[DeterminismResult]:
    """Exhaustive |c q z| = 0 mod 2^(chi-1) over both full spans."""
    mod = 1 << (p.chi - 1)
    if mod == 1:
        return None
    if mod == 2:
        # weight parity is bilinear in (c, q): basis pairs decide the spans
        for z in z_words:
            for c in _basis_words(p.r, p.m):
                cz = c & z
                for q in _basis_words(p.t, p.m):
                    if (cz & q).bit_count() & 1:
                        return _counterexample(p, c, q, z, "weight_cqz")
        return None
    work = (1 << (rm_dim(p.r, p.m) + rm_dim(p.t, p.m))) * len(z_words)
    if work > _DIRECT_SCAN_BOUND:
        found = _hunt_cqz(p, z_words)
        if found is not None:
            return found
    return _scan_weight_cqz(p, z_words)


def determinism_exact(p: FamilyParams, check_full_code_z: bool = False) -> DeterminismResult:
    """Decide determinism by the exact weight conditions, with a violating triple.

    ``check_full_code_z`` ranges z over the whole code instead of the basis,
    for validation of the basis-suffices argument.
    """
    if check_full_code_z:
        code = rm_basis(p.r, p.m)
        check_budget(1 << code.dim, "full-code z enumeration")
        z_words = [w for w in span_words(code.basis.row_words()) if w]
    else:
        z_words = list(_basis_words(p.r, p.m))
    found = _verify_weight_cz(p, z_words)
    if found is not None:
        return found
    found = _verify_weight_cqz(p, z_words)
    if found is not None:
        return found
    return DeterminismResult(True)


# ---------------------------------------------------------------------------
# closed-form evaluation


def _closed_form_bit(z_weight_and: int, z_weight: int, chi: int) -> int:
    mod_q, mod_z = 1 << chi, 1 << (chi + 1)
    if z_weight_and % (1 << (chi - 1)):
        raise PromiseViolation(
            f"|z&q| = {z_weight_and} is not divisible by 2^{chi - 1}; "
            "the parameter set is not deterministic"
        )
    if z_weight % (1 << chi):
        raise PromiseViolation(
            f"|z| = {z_weight} is not divisible by 2^{chi}; "
            "the parameter set is not deterministic"
        )
    return ((z_weight_and % mod_q) >> (chi - 1)) ^ ((z_weight % mod_z) >> chi)


def closed_form(p: FamilyParams, i: BitVec) -> BitVec:
    """Output bits from the weight formula alone (no state involved)."""
    q_basis = _basis_words(p.t, p.m)
    if i.n != len(q_basis):
        raise ValueError(f"input length {i.n}, expected {len(q_basis)}")
    q = 0
    for j, g in enumerate(q_basis):
        if i[j]:
            q ^= g
    out = 0
    z_rows = _basis_words(p.r, p.m)
    for r_idx, z in enumerate(z_rows):
        bit = _closed_form_bit((z & q).bit_count(), z.bit_count(), p.chi)
        out |= bit << r_idx
    return BitVec(len(z_rows), out)


def closed_form_table(p: FamilyParams) -> TruthTable:
    """Closed-form outputs for every input, vectorized over the input space."""
    q_basis = _basis_words(p.t, p.m)
    z_rows = _basis_words(p.r, p.m)
    n_in, n_out = len(q_basis), len(z_rows)
    check_budget((1 << n_in) * max(n_out, 1), f"closed-form table for {p}")
    if (1 << p.m) > 64:
        rows = tuple(closed_form(p, BitVec(n_in, x)) for x in range(1 << n_in))
        return TruthTable(n_in, n_out, rows)
    q_arr = span_array(q_basis, 1 << p.m)
    out = np.zeros(1 << n_in, dtype=np.int64)
    chi = p.chi
    for r_idx, z in enumerate(z_rows):
        zw = z.bit_count()
        if zw % (1 << chi):
            raise PromiseViolation(f"|z| = {zw} is not divisible by 2^{chi}")
        w = popcount_u64(q_arr & np.uint64(z)).astype(np.int64)
        if (w % (1 << (chi - 1))).any():
            bad = int(np.nonzero(w % (1 << (chi - 1)))[0][0])
            raise PromiseViolation(
                f"|z&q| = {int(w[bad])} at input {bad} is not divisible by 2^{chi - 1}"
            )
        bits = ((w % (1 << chi)) >> (chi - 1)) ^ ((zw % (1 << (chi + 1))) >> chi)
        out |= bits << r_idx
    rows = tuple(BitVec(n_out, int(v)) for v in out)
    return TruthTable(n_in, n_out, rows)


# ---------------------------------------------------------------------------
# phase diagram


@dataclass(frozen=True)
class PhaseDiagramCell:
    r: int
    m: int
    klass: str  # Probabilistic | DeterministicLinear | Unknown | NonlinearDeterministic
    chi_max: Optional[int] = None
    witness_t: Optional[int] = None


def _chi_max_with_witness(r: int, m: int) -> Tuple[int, int]:
    best = None
    for chi in range(2, m + 2):
        for t in range(m + 1):
            if (chi - 1) * (r + t) < m - r <= chi * t:
                best = (chi, t)
                break
    if best is None:
        raise AssertionError(f"no sufficient (chi, t) found for nonlinear cell ({r},{m})")
    return best


def phase_diagram(r_max: int, m_max: int) -> List[PhaseDiagramCell]:
    """Classify every resource-state cell (r <= r_max, 1 <= m <= m_max, r <= m).

    Probabilistic for m <= 2r; deterministic-linear for 2r < m <= 3r and for
    (r,m) = (0,1); open on the line m = 3r+1 for r >= 1; deterministic
    nonlinear beyond, annotated with the largest workable chi and a witness t.
    """
    cells = []
    for r in range(r_max + 1):
        for m in range(max(r, 1), m_max + 1):
            if m <= 2 * r:
                cells.append(PhaseDiagramCell(r, m, "Probabilistic"))
            elif m <= 3 * r or (r, m) == (0, 1):
                cells.append(PhaseDiagramCell(r, m, "DeterministicLinear"))
            elif r >= 1 and m == 3 * r + 1:
                cells.append(PhaseDiagramCell(r, m, "Unknown"))
            else:
                chi, t = _chi_max_with_witness(r, m)
                cells.append(PhaseDiagramCell(r, m, "NonlinearDeterministic", chi, t))
    return cells


def phase_diagram_csv(cells: Sequence[PhaseDiagramCell]) -> str:
    lines = ["r,m,class,chi_max,witness_t"]
    for c in cells:
        chi = "" if c.chi_max is None else str(c.chi_max)
        t = "" if c.witness_t is None else str(c.witness_t)
        lines.append(f"{c.r},{c.m},{c.klass},{chi},{t}")
    return "\r\n".join(lines) + "\r\n"


# ---------------------------------------------------------------------------
# worked studies


_EXAMPLE2_SEED = 0x9E37


def example2_report(cross_check_samples: int = 256) -> Dict[str, object]:
    """Full analysis of the 32-qubit member (r=1, t=2, m=5, chi=2).

    Evaluates the closed form on all 2^16 inputs, cross-checks a pinned random
    sample against the exact engine, counts outputs per row, and reports the
    linearity verdict and the admissible-input count.
    """
    p = FamilyParams(1, 2, 5, 2)
    tt = closed_form_table(p)
    inst = build(p)
    rng = np.random.default_rng(_EXAMPLE2_SEED)
    sample = rng.integers(0, 1 << tt.n_in, size=cross_check_samples)
    mismatches = 0
    for x in sample:
        got = run(inst, BitVec(tt.n_in, int(x))).output
        if got != tt.rows[int(x)]:
            mismatches += 1
    adm = admissible_inputs(
        inst.state, inst.angles, inst.z_matrix, rm_basis(p.t, p.m).basis
    )
    code = rm_basis(p.r, p.m)
    rows = []
    for r_idx, z in enumerate(code.basis.rows):
        ones = sum(tt.rows[x][r_idx] for x in range(1 << tt.n_in))
        rows.append(
            {
                "row": r_idx,
                "degree": len(code.monomials[r_idx]),
                "support_weight": z.weight,
                "zeros": (1 << tt.n_in) - ones,
                "ones": ones,
            }
        )
    verdict = is_linear(tt)
    return {
        "params": {"r": p.r, "t": p.t, "m": p.m, "chi": p.chi},
        "inputs": 1 << tt.n_in,
        "cross_check_samples": int(cross_check_samples),
        "cross_check_mismatches": mismatches,
        "admissible_count": len(adm.qs),
        "admissible_is_vector_space": adm.is_vector_space,
        "rows": rows,
        "linear": verdict.linear,
    }


def m4_correspondence_report() -> Dict[str, object]:
    """The 16-qubit member (r=1, t=2, m=4, chi=2) against its expected behavior.

    The full input space is not deterministic; on the exactly-computed
    admissible subset the degree-1 output rows should induce the constant-0
    function.  Any admissible input breaking that expectation is listed as a
    discrepancy instead of being silently accepted.
    """
    p = FamilyParams(1, 2, 4, 2)
    det = determinism_exact(p)
    inst = build(p)
    adm = admissible_inputs(
        inst.state, inst.angles, inst.z_matrix, rm_basis(p.t, p.m).basis
    )
    code = rm_basis(p.r, p.m)
    degree1 = [r for r, a in enumerate(code.monomials) if len(a) == 1]
    discrepancies = []
    for q in adm.qs:
        for r_idx in degree1:
            z = code.basis.rows[r_idx]
            from .phasestate import CorrelationContext, expectation, extremal_bit

            res = extremal_bit(expectation(inst.state, inst.angles, CorrelationContext(z, q)))
            if not res.is_extremal:
                raise AssertionError("admissible input lost extremality")
            if res.bit != 0:
                discrepancies.append({"q": str(q), "row": r_idx, "bit": res.bit})
    report: Dict[str, object] = {
        "params": {"r": p.r, "t": p.t, "m": p.m, "chi": p.chi},
        "deterministic_on_full_space": det.deterministic,
        "admissible_count": len(adm.qs),
        "admissible_is_vector_space": adm.is_vector_space,
        "degree1_rows": degree1,
        "degree1_constant_zero": not discrepancies,
        "discrepancies": discrepancies,
    }
    if det.counterexample is not None:
        ce = det.counterexample
        report["counterexample"] = {
            "c": str(ce.c),
            "q": str(ce.q),
            "z": str(ce.z),
            "condition": ce.condition,
        }
    return report
