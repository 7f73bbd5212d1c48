"""Boolean-function analysis: truth tables, affine-linearity, AND extraction.

"Linear" throughout means affine over GF(2), f(x) = Ax + b; the offset is
always allowed.  Nonlinearity is certified by a four-point parity witness
f(0) + f(p) + f(q) + f(p+q) != 0.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .gf2 import BinMatrix, BitVec, mat_apply_vec

__all__ = [
    "TruthTable",
    "AffineMap",
    "LinearityVerdict",
    "is_linear",
    "check_equiv_mod_linear",
    "and_from_nonlinear",
    "truth_table_csv",
]


@dataclass(frozen=True)
class TruthTable:
    """Outputs for every input of {0,1}^n_in, indexed by the input's integer value.

    Input bit j is bit j of the row index, matching the BitVec convention.
    """

    n_in: int
    n_out: int
    rows: Tuple[BitVec, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != 1 << self.n_in:
            raise ValueError(f"expected {1 << self.n_in} rows, got {len(self.rows)}")
        for r in self.rows:
            if r.n != self.n_out:
                raise ValueError("output width mismatch")

    @classmethod
    def from_function(
        cls, fn: Callable[[BitVec], BitVec], n_in: int, n_out: int
    ) -> "TruthTable":
        rows = tuple(fn(BitVec(n_in, x)) for x in range(1 << n_in))
        return cls(n_in, n_out, rows)

    def output(self, x) -> BitVec:
        idx = x.word if isinstance(x, BitVec) else int(x)
        return self.rows[idx]

    def output_word(self, x: int) -> int:
        return self.rows[x].word


@dataclass(frozen=True)
class AffineMap:
    """x -> A x + b over GF(2)."""

    matrix: BinMatrix
    offset: BitVec

    def __post_init__(self) -> None:
        if self.offset.n != self.matrix.n_rows:
            raise ValueError("offset length differs from row count")

    @classmethod
    def from_lists(cls, rows, offset) -> "AffineMap":
        mat = BinMatrix.from_rows(rows, n_cols=len(rows[0]) if rows else len(offset))
        return cls(mat, BitVec.from_bits(offset))

    @classmethod
    def identity(cls, n: int) -> "AffineMap":
        return cls(BinMatrix.identity(n), BitVec.zeros(n))

    @property
    def n_in(self) -> int:
        return self.matrix.n_cols

    @property
    def n_out(self) -> int:
        return self.matrix.n_rows

    def __call__(self, x: BitVec) -> BitVec:
        return mat_apply_vec(self.matrix, x) ^ self.offset


@dataclass(frozen=True)
class LinearityVerdict:
    """Either the unique affine map reproducing the table, or a 4-point witness."""

    linear: bool
    affine: Optional[AffineMap] = None
    witness: Optional[Tuple[BitVec, BitVec]] = None


def _affine_fit_words(tt: TruthTable) -> List[int]:
    """Predicted output words of the affine fit through 0 and the unit inputs."""
    b = tt.rows[0].word
    cols = [tt.rows[1 << j].word ^ b for j in range(tt.n_in)]
    pred = [0] * (1 << tt.n_in)
    pred[0] = b
    for x in range(1, 1 << tt.n_in):
        low = x & -x
        pred[x] = pred[x ^ low] ^ cols[low.bit_length() - 1]
    return pred


def is_linear(tt: TruthTable) -> LinearityVerdict:
    """Decide affine-ness; nonlinearity comes with a verified 4-point witness."""
    pred = _affine_fit_words(tt)
    failing = [x for x in range(1 << tt.n_in) if tt.rows[x].word != pred[x]]
    if not failing:
        b = tt.rows[0]
        cols = BinMatrix.from_rows(
            [BitVec(tt.n_out, tt.rows[1 << j].word ^ b.word) for j in range(tt.n_in)],
            n_cols=tt.n_out,
        )
        return LinearityVerdict(True, affine=AffineMap(cols.transpose(), b))
    # Minimal failing input by (popcount, value): all strictly smaller inputs
    # match the fit, so splitting off the lowest set bit gives a witness.
    x_star = min(failing, key=lambda x: (x.bit_count(), x))
    p = x_star & -x_star
    q = x_star ^ p
    pv, qv = BitVec(tt.n_in, p), BitVec(tt.n_in, q)
    check = (
        tt.rows[0].word ^ tt.rows[p].word ^ tt.rows[q].word ^ tt.rows[x_star].word
    )
    assert check != 0, "witness construction failed"
    return LinearityVerdict(False, witness=(pv, qv))


def _compose_side(
    f: TruthTable, l1: AffineMap, l2: AffineMap, l3: AffineMap, x: BitVec
) -> BitVec:
    y = l1(x)
    fy = f.output(y)
    l2y = l2(y)
    concat = BitVec(fy.n + l2y.n, fy.word | (l2y.word << fy.n))
    return l3(concat)


def check_equiv_mod_linear(
    f: TruthTable,
    g: TruthTable,
    l1: AffineMap,
    l2: AffineMap,
    l3: AffineMap,
    l1p: AffineMap,
    l2p: AffineMap,
    l3p: AffineMap,
) -> bool:
    """Both directions of equivalence modulo linear maps.

    Forward: g(x) = L3(f(L1 x), L2(L1 x)) on every input; backward the same
    with f and g swapped and the primed maps.  Concatenation places the inner
    function's output bits first.
    """
    if l1.n_in != g.n_in or l1.n_out != f.n_in:
        raise ValueError("L1 dimensions incompatible")
    if l2.n_in != f.n_in or l3.n_in != f.n_out + l2.n_out or l3.n_out != g.n_out:
        raise ValueError("L2/L3 dimensions incompatible")
    if l1p.n_in != f.n_in or l1p.n_out != g.n_in:
        raise ValueError("L1' dimensions incompatible")
    if l2p.n_in != g.n_in or l3p.n_in != g.n_out + l2p.n_out or l3p.n_out != f.n_out:
        raise ValueError("L2'/L3' dimensions incompatible")
    for x in range(1 << g.n_in):
        xv = BitVec(g.n_in, x)
        if _compose_side(f, l1, l2, l3, xv) != g.output(x):
            return False
    for x in range(1 << f.n_in):
        xv = BitVec(f.n_in, x)
        if _compose_side(g, l1p, l2p, l3p, xv) != f.output(x):
            return False
    return True


def and_from_nonlinear(tt: TruthTable) -> Tuple[BitVec, BitVec, BitVec, TruthTable]:
    """Extract an AND gate from any nonlinear single-output function.

    Returns (a, b, c, g) with g(r, s) = f(c+ra+sb) + f(c+ra) + f(c+sb) + f(c)
    equal to r AND s on all four points; raises for linear tables, where no
    such triple exists.
    """
    if tt.n_out != 1:
        raise ValueError("AND extraction needs a single-output table")
    verdict = is_linear(tt)
    if verdict.linear:
        raise ValueError("table is affine; no AND triple exists")
    p, q = verdict.witness
    a, b, c = p.word, q.word, 0
    rows = []
    for idx in range(4):
        r, s = idx & 1, idx >> 1
        val = (
            tt.rows[c ^ (r * a) ^ (s * b)].word
            ^ tt.rows[c ^ (r * a)].word
            ^ tt.rows[c ^ (s * b)].word
            ^ tt.rows[c].word
        )
        rows.append(BitVec(1, val))
    g = TruthTable(2, 1, tuple(rows))
    for idx in range(4):
        assert g.rows[idx].word == (idx & 1) & (idx >> 1), "extracted gate is not AND"
    return BitVec(tt.n_in, a), BitVec(tt.n_in, b), BitVec(tt.n_in, c), g


def truth_table_csv(tt: TruthTable) -> str:
    """CSV with one input/output bit per column, inputs in index order."""
    buf = io.StringIO()
    header = [f"i{j}" for j in range(tt.n_in)] + [f"o{j}" for j in range(tt.n_out)]
    buf.write(",".join(header) + "\r\n")
    for x in range(1 << tt.n_in):
        bits = list(BitVec(tt.n_in, x)) + list(tt.rows[x])
        buf.write(",".join(str(b) for b in bits) + "\r\n")
    return buf.getvalue()
