"""GF(2) bit-vector and matrix algebra on int bitsets.

Every vector is an immutable ``BitVec`` storing its coordinates in a single
Python int (coordinate ``j`` is bit ``j``, so serialization lists coordinates
left-to-right by index).  Matrices are tuples of equal-length rows.  All
operations are pure; values are safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "BitVec",
    "BinMatrix",
    "SolveOutcome",
    "weight",
    "coord_product",
    "mat_apply",
    "solve_gf2",
    "enumerate_span",
    "rank_words",
    "echelon_words",
    "in_span_words",
    "span_words",
    "span_array",
    "span_chunks",
    "popcount_u64",
]


@dataclass(frozen=True)
class BitVec:
    """Binary vector of fixed length ``n``; coordinate j is bit j of ``word``."""

    n: int
    word: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative length {self.n}")
        if self.word < 0 or self.word >> self.n:
            raise ValueError(f"word 0x{self.word:x} does not fit in {self.n} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        word = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"coordinate {b!r} is not a bit")
            word |= b << n
            n += 1
        return cls(n, word)

    @classmethod
    def from_string(cls, s: str) -> "BitVec":
        return cls.from_bits(int(c) for c in s)

    @classmethod
    def zeros(cls, n: int) -> "BitVec":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVec":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, j: int) -> "BitVec":
        if not 0 <= j < n:
            raise IndexError(j)
        return cls(n, 1 << j)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise IndexError(j)
        return (self.word >> j) & 1

    def __iter__(self) -> Iterator[int]:
        w = self.word
        for _ in range(self.n):
            yield w & 1
            w >>= 1

    def __xor__(self, other: "BitVec") -> "BitVec":
        self._check_len(other)
        return BitVec(self.n, self.word ^ other.word)

    def __and__(self, other: "BitVec") -> "BitVec":
        self._check_len(other)
        return BitVec(self.n, self.word & other.word)

    def _check_len(self, other: "BitVec") -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    @property
    def weight(self) -> int:
        return self.word.bit_count()

    def dot(self, other: "BitVec") -> int:
        """Mod-2 inner product."""
        self._check_len(other)
        return (self.word & other.word).bit_count() & 1

    def overlap(self, other: "BitVec") -> int:
        """Integer inner product (size of the common support)."""
        self._check_len(other)
        return (self.word & other.word).bit_count()

    def to_bits(self) -> List[int]:
        return list(self)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)

    def __repr__(self) -> str:
        return f"BitVec('{self}')"


@dataclass(frozen=True)
class BinMatrix:
    """Matrix over GF(2): an ordered tuple of equal-length ``BitVec`` rows."""

    n_rows: int
    n_cols: int
    rows: Tuple[BitVec, ...]

    def __post_init__(self) -> None:
        if self.n_rows != len(self.rows):
            raise ValueError("row count mismatch")
        for r in self.rows:
            if r.n != self.n_cols:
                raise ValueError(f"row length {r.n} != n_cols {self.n_cols}")

    @classmethod
    def from_rows(cls, rows: Sequence, n_cols: Optional[int] = None) -> "BinMatrix":
        vecs = tuple(r if isinstance(r, BitVec) else BitVec.from_bits(r) for r in rows)
        if n_cols is None:
            if not vecs:
                raise ValueError("n_cols required for an empty matrix")
            n_cols = vecs[0].n
        return cls(len(vecs), n_cols, vecs)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BinMatrix":
        return cls(n_rows, n_cols, tuple(BitVec.zeros(n_cols) for _ in range(n_rows)))

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls(n, n, tuple(BitVec.unit(n, j) for j in range(n)))

    def row_words(self) -> List[int]:
        return [r.word for r in self.rows]

    def transpose(self) -> "BinMatrix":
        cols = []
        for j in range(self.n_cols):
            w = 0
            for i, r in enumerate(self.rows):
                w |= ((r.word >> j) & 1) << i
            cols.append(BitVec(self.n_rows, w))
        return BinMatrix(self.n_cols, self.n_rows, tuple(cols))

    def rank(self) -> int:
        return rank_words(self.row_words())

    def is_zero(self) -> bool:
        return all(r.word == 0 for r in self.rows)

    def to_lists(self) -> List[List[int]]:
        return [r.to_bits() for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def weight(v: BitVec) -> int:
    """Hamming weight: the number of 1-coordinates."""
    return v.weight


def coord_product(a: BitVec, b: BitVec) -> BitVec:
    """Coordinate-wise product of two equal-length vectors."""
    return a & b


def mat_apply(m: BinMatrix, v: BitVec, mode: str = "mod2") -> List[int]:
    """Apply a matrix to a vector row-by-row.

    ``mode="mod2"`` gives each row's mod-2 inner product with ``v``;
    ``mode="integer"`` gives the integer inner product (common-support size).
    """
    if v.n != m.n_cols:
        raise ValueError(f"dimension mismatch: vector {v.n}, matrix cols {m.n_cols}")
    if mode == "mod2":
        return [(r.word & v.word).bit_count() & 1 for r in m.rows]
    if mode == "integer":
        return [(r.word & v.word).bit_count() for r in m.rows]
    raise ValueError(f"unknown mode {mode!r}")


def mat_apply_vec(m: BinMatrix, v: BitVec) -> BitVec:
    """Mod-2 matrix application packed back into a BitVec of length n_rows."""
    if v.n != m.n_cols:
        raise ValueError(f"dimension mismatch: vector {v.n}, matrix cols {m.n_cols}")
    w = 0
    for i, r in enumerate(m.rows):
        w |= ((r.word & v.word).bit_count() & 1) << i
    return BitVec(m.n_rows, w)


# ---------------------------------------------------------------------------
# raw-word helpers (hot paths work on plain ints)


def echelon_words(words: Iterable[int]) -> List[Tuple[int, int]]:
    """Row-reduce to a list of (pivot_bit, row_word) pairs, pivots ascending.

    Each returned row has a leading 1 at its pivot position and zeros at all
    other pivot positions (reduced form), so reduction against the basis is a
    single pass.
    """
    basis: List[Tuple[int, int]] = []
    for w in words:
        for piv, bw in basis:
            if (w >> piv) & 1:
                w ^= bw
        if w:
            piv = (w & -w).bit_length() - 1
            basis = [(p, bw ^ w if (bw >> piv) & 1 else bw) for p, bw in basis]
            basis.append((piv, w))
    basis.sort()
    return basis


def rank_words(words: Iterable[int]) -> int:
    return len(echelon_words(words))


def reduce_word(w: int, basis: Sequence[Tuple[int, int]]) -> int:
    for piv, bw in basis:
        if (w >> piv) & 1:
            w ^= bw
    return w


def in_span_words(w: int, basis: Sequence[Tuple[int, int]]) -> bool:
    return reduce_word(w, basis) == 0


def independent_words(words: Sequence[int]) -> List[int]:
    """Subset of ``words`` forming a basis of their span, original order."""
    basis: List[Tuple[int, int]] = []
    kept: List[int] = []
    for w in words:
        r = reduce_word(w, basis)
        if r:
            piv = (r & -r).bit_length() - 1
            basis = [(p, bw ^ r if (bw >> piv) & 1 else bw) for p, bw in basis]
            basis.append((piv, r))
            basis.sort()
            kept.append(w)
    return kept


def span_words(basis_words: Sequence[int]) -> Iterator[int]:
    """All 2^k span elements of k independent words, Gray-code order, 0 first."""
    k = len(basis_words)
    x = 0
    yield x
    for i in range(1, 1 << k):
        x ^= basis_words[(i & -i).bit_length() - 1]
        yield x


def span_array(basis_words: Sequence[int], n_cols: int) -> np.ndarray:
    """Full span as a uint64 array indexed by coefficient integer.

    Element i is the XOR of the basis words selected by the bits of i, so the
    order matches binary counting on coefficients (not Gray order).
    """
    if n_cols > 64:
        raise ValueError("span_array supports at most 64 columns")
    k = len(basis_words)
    out = np.zeros(1 << k, dtype=np.uint64)
    for j, g in enumerate(basis_words):
        half = 1 << j
        out[half : 2 * half] = out[:half] ^ np.uint64(g)
    return out


def span_chunks(
    basis_words: Sequence[int], n_cols: int, chunk_bits: int = 16
) -> Iterator[np.ndarray]:
    """Cover the span exactly once in uint64 blocks of at most 2^chunk_bits."""
    k = len(basis_words)
    low = basis_words[: min(k, chunk_bits)]
    base = span_array(low, n_cols)
    if k <= chunk_bits:
        yield base
        return
    for high in span_words(basis_words[chunk_bits:]):
        yield base ^ np.uint64(high)


def popcount_u64(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr)


# ---------------------------------------------------------------------------
# linear solving with infeasibility certificates


@dataclass(frozen=True)
class SolveOutcome:
    """Result of solving A x = b over GF(2).

    Exactly one of ``solution`` and ``certificate`` is set.  A certificate y
    witnesses infeasibility: yᵀA = 0 and yᵀb = 1, i.e. the selected rows sum
    to the contradiction 0 = 1.
    """

    solution: Optional[BitVec]
    certificate: Optional[BitVec]

    @property
    def solvable(self) -> bool:
        return self.solution is not None


def solve_words(
    words: Sequence[int], parities: Sequence[int]
) -> Tuple[Optional[int], Optional[int]]:
    """Raw-int core of ``solve_gf2``: returns (solution, None) or (None, certificate).

    Provenance masks over the original row indices are folded lazily: only
    rows that join the basis, and the one contradicting row, pay for the
    large-int XOR, so feeding hundreds of thousands of rows stays cheap.
    """
    basis: List[Tuple[int, int, int, int]] = []  # (pivot, row, parity, provenance)
    for i, w in enumerate(words):
        par = parities[i] & 1
        used: List[int] = []
        for k, (piv, bw, bpar, _) in enumerate(basis):
            if (w >> piv) & 1:
                w ^= bw
                par ^= bpar
                used.append(k)
        if w == 0:
            if par:
                prov = 1 << i
                for k in used:
                    prov ^= basis[k][3]
                return None, prov
            continue
        prov = 1 << i
        for k in used:
            prov ^= basis[k][3]
        piv = (w & -w).bit_length() - 1
        basis = [
            (p, bw ^ w, bpar ^ par, bprov ^ prov) if (bw >> piv) & 1 else (p, bw, bpar, bprov)
            for p, bw, bpar, bprov in basis
        ]
        basis.append((piv, w, par, prov))
    x = 0
    for piv, _, par, _ in basis:
        if par:
            x |= 1 << piv
    # reduced echelon form: free variables 0, pivot variables = row parity
    return x, None


def solve_gf2(a: BinMatrix, b: BitVec) -> SolveOutcome:
    """Solve A x = b over GF(2), or certify that no solution exists."""
    if b.n != a.n_rows:
        raise ValueError(f"dimension mismatch: b has {b.n} entries, A has {a.n_rows} rows")
    x, cert = solve_words([r.word for r in a.rows], list(b))
    if cert is not None:
        acc = 0
        par = 0
        for i, r in enumerate(a.rows):
            if (cert >> i) & 1:
                acc ^= r.word
                par ^= b[i]
        assert acc == 0 and par == 1, "certificate fails its contract"
        return SolveOutcome(None, BitVec(a.n_rows, cert))
    assert all((r.word & x).bit_count() & 1 == b[i] for i, r in enumerate(a.rows))
    return SolveOutcome(BitVec(a.n_cols, x), None)


def left_nullspace_basis(a: BinMatrix) -> List[BitVec]:
    """Basis of {y : yᵀA = 0}, each y a combination of original row indices."""
    basis: List[Tuple[int, int, int]] = []  # (pivot, row, provenance)
    null: List[BitVec] = []
    for i in range(a.n_rows):
        w = a.rows[i].word
        prov = 1 << i
        for piv, bw, bprov in basis:
            if (w >> piv) & 1:
                w ^= bw
                prov ^= bprov
        if w == 0:
            null.append(BitVec(a.n_rows, prov))
            continue
        piv = (w & -w).bit_length() - 1
        basis = [
            (p, bw ^ w, bprov ^ prov) if (bw >> piv) & 1 else (p, bw, bprov)
            for p, bw, bprov in basis
        ]
        basis.append((piv, w, prov))
    return null


def enumerate_span(generators: BinMatrix) -> Iterator[BitVec]:
    """Yield every element of the row span exactly once (Gray-code order)."""
    basis = [w for _, w in echelon_words(generators.row_words())]
    n = generators.n_cols
    for w in span_words(basis):
        yield BitVec(n, w)
