"""Reed-Muller codes R(r,m), punctured codes, and the derived CSS codes.

Coordinate convention, fixed globally: coordinate j of a length-2^m codeword
is the evaluation of a Boolean polynomial at the point whose k-th variable
(1-based) is bit k-1 of j, least significant bit first.  The canonical basis
lists monomial evaluations ordered by degree, then lexicographically by the
variable set.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

import numpy as np

from ._budget import check_budget
from .gf2 import BinMatrix, BitVec, popcount_u64, rank_words, span_chunks, span_words

__all__ = [
    "RMCode",
    "CSSCode",
    "CSSOrthogonalityError",
    "rm_dim",
    "rm_basis",
    "puncture",
    "css_generators",
    "weight_distribution",
    "ax_check",
    "code_report",
    "restrict_word",
    "subcube_coords",
]


class CSSOrthogonalityError(ValueError):
    """X- and Z-side generators fail the even-overlap requirement."""

    def __init__(self, side_x: str, i: int, side_z: str, j: int) -> None:
        super().__init__(f"odd overlap between {side_x} row {i} and {side_z} row {j}")
        self.offending = (side_x, i, side_z, j)


@dataclass(frozen=True)
class RMCode:
    """Reed-Muller code of order ``r`` on ``m`` variables with its monomial basis."""

    r: int
    m: int
    basis: BinMatrix
    monomials: Tuple[Tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.basis.n_rows

    @property
    def length(self) -> int:
        return self.basis.n_cols

    def codewords(self) -> Iterator[BitVec]:
        for w in span_words(self.basis.row_words()):
            yield BitVec(self.length, w)


@dataclass(frozen=True)
class CSSCode:
    """CSS stabilizer generators in standard form, plus the logical supports."""

    n: int
    gx: BinMatrix
    gz: BinMatrix
    xbar: BitVec
    zbar: BitVec


def rm_dim(r: int, m: int) -> int:
    return sum(math.comb(m, i) for i in range(r + 1))


def monomial_word(alpha: Tuple[int, ...], m: int) -> int:
    """Evaluation vector of the monomial with variable set ``alpha`` (1-based)."""
    mask = 0
    for k in alpha:
        mask |= 1 << (k - 1)
    word = 0
    j = mask
    top = (1 << m) - 1
    while True:  # iterate supersets of mask
        word |= 1 << j
        if j == top:
            break
        j = (j + 1) | mask
    return word


def rm_basis(r: int, m: int) -> RMCode:
    """Canonical monomial basis of R(r,m); first row is the all-ones vector."""
    if m < 0 or r < 0:
        raise ValueError(f"negative parameters (r={r}, m={m})")
    if r > m:
        raise ValueError(f"order r={r} exceeds variable count m={m}")
    monomials: List[Tuple[int, ...]] = []
    for deg in range(r + 1):
        monomials.extend(itertools.combinations(range(1, m + 1), deg))
    n = 1 << m
    rows = tuple(BitVec(n, monomial_word(a, m)) for a in monomials)
    return RMCode(r, m, BinMatrix(len(rows), n, rows), tuple(monomials))


def puncture(code: RMCode) -> BinMatrix:
    """Delete the all-zero-point coordinate (index 0) from every basis row."""
    if code.r > code.m - 1:
        raise ValueError(f"puncturing undefined for r={code.r} = m={code.m}")
    n = code.length - 1
    rows = tuple(BitVec(n, row.word >> 1) for row in code.basis.rows)
    out = BinMatrix(len(rows), n, rows)
    if rank_words(out.row_words()) != len(rows):
        raise AssertionError("punctured rows lost independence")
    return out


def css_generators(r: int, m: int) -> CSSCode:
    """CSS code from the punctured codes R*(r,m) (X side) and R*(m-r-1,m) (Z side).

    The first punctured basis row (the punctured all-ones vector) becomes the
    logical operator support on each side; the remaining rows are stabilizer
    generators.  All orthogonality requirements are verified, not assumed.
    """
    if r < 0 or r > m - 1:
        raise ValueError(f"need 0 <= r <= m-1, got r={r}, m={m}")
    px = puncture(rm_basis(r, m))
    pz = puncture(rm_basis(m - r - 1, m))
    n = (1 << m) - 1
    xbar, gx_rows = px.rows[0], px.rows[1:]
    zbar, gz_rows = pz.rows[0], pz.rows[1:]
    for i, gx in enumerate(gx_rows):
        for j, gz in enumerate(gz_rows):
            if gx.dot(gz):
                raise CSSOrthogonalityError("GX", i, "GZ", j)
    for j, gz in enumerate(gz_rows):
        if xbar.dot(gz):
            raise CSSOrthogonalityError("Xbar", 0, "GZ", j)
    for i, gx in enumerate(gx_rows):
        if zbar.dot(gx):
            raise CSSOrthogonalityError("GX", i, "Zbar", 0)
    if not xbar.dot(zbar):
        raise CSSOrthogonalityError("Xbar", 0, "Zbar", 0)
    if len(gx_rows) + len(gz_rows) != n - 1:
        raise AssertionError("stabilizer generator count is not n-1")
    return CSSCode(
        n,
        BinMatrix(len(gx_rows), n, gx_rows),
        BinMatrix(len(gz_rows), n, gz_rows),
        xbar,
        zbar,
    )


def _weight_counts(code: RMCode) -> np.ndarray:
    words = code.basis.row_words()
    counts = np.zeros(code.length + 1, dtype=np.int64)
    if code.length <= 64:
        for chunk in span_chunks(words, code.length):
            counts += np.bincount(popcount_u64(chunk), minlength=code.length + 1)
    else:
        for w in span_words(words):
            counts[w.bit_count()] += 1
    return counts


def weight_distribution(r: int, m: int) -> Dict[int, int]:
    """Exact weight histogram over all 2^dim codewords of R(r,m)."""
    code = rm_basis(r, m)
    if code.dim > 24:
        raise ValueError(f"weight_distribution limited to dim <= 24, got dim={code.dim}")
    counts = _weight_counts(code)
    return {int(w): int(c) for w, c in enumerate(counts) if c}


def ax_check(r: int, m: int) -> Tuple[int, bool]:
    """Empirical weight-divisibility exponent of R(r,m), by full enumeration.

    Returns (e, sharp) where 2^e is the largest power of two dividing every
    nonzero-codeword weight and ``sharp`` says whether e equals
    ceil(m/r) - 1.  Deliberately enumerates rather than using the algebraic
    statement, so it serves as an independent check of it.
    """
    if r < 1:
        raise ValueError("divisibility exponent is defined for positive order r >= 1")
    if r > m:
        raise ValueError(f"order r={r} exceeds variable count m={m}")
    code = rm_basis(r, m)
    check_budget(1 << code.dim, f"ax_check({r},{m}) codeword scan")
    acc = 0
    if code.length <= 64:
        for chunk in span_chunks(code.basis.row_words(), code.length):
            acc |= int(np.bitwise_or.reduce(popcount_u64(chunk)))
    else:
        for w in span_words(code.basis.row_words()):
            acc |= w.bit_count()
    # 2-adic valuation of the OR equals the minimum valuation of the weights
    exponent = (acc & -acc).bit_length() - 1
    return exponent, exponent == math.ceil(m / r) - 1


def code_report(r: int, m: int) -> Dict[str, object]:
    """JSON-ready record of code metadata and its exact weight distribution."""
    dist = weight_distribution(r, m)
    return {
        "r": r,
        "m": m,
        "dim": rm_dim(r, m),
        "weights": {str(w): c for w, c in sorted(dist.items())},
    }


def subcube_coords(support_word: int) -> List[int]:
    """Coordinate indices in a support mask, ascending."""
    coords = []
    j = 0
    w = support_word
    while w:
        if w & 1:
            coords.append(j)
        w >>= 1
        j += 1
    return coords


def restrict_word(word: int, support_word: int) -> int:
    """Compress ``word`` to the coordinates of ``support_word`` (ascending)."""
    out = 0
    pos = 0
    j = 0
    w = support_word
    while w:
        if w & 1:
            out |= ((word >> j) & 1) << pos
            pos += 1
        w >>= 1
        j += 1
    return out
