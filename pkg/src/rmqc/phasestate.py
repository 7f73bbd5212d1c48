"""Phase-coset resource states and exact correlation expectation values.

A state is a uniform-modulus superposition over a GF(2) span S with signs
given by a quadratic-plus-linear binary phase.  Expectation values of X-Y
plane correlation operators are evaluated exactly as integer histograms over
powers of the primitive 2^(D+1)-th root of unity, so extremality checks are
integer equalities with no tolerance policy.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .gf2 import BinMatrix, BitVec, echelon_words, in_span_words, span_array, span_words

__all__ = [
    "PhaseCosetState",
    "AngleSpec",
    "CorrelationContext",
    "CyclotomicSum",
    "ExtremalResult",
    "make_rm_state",
    "expectation",
    "extremal_bit",
    "x_stabilizer_expectation",
    "state_to_dict",
    "state_from_dict",
]


@dataclass(frozen=True)
class PhaseCosetState:
    """|S|^{-1/2} sum over x in S of (-1)^{Q(x) + lin.x} |x>.

    ``generators`` rows span S and must be independent.  ``quad`` is a sparse
    strictly-upper-triangular quadratic form, a tuple of (a, b) site pairs
    with a < b; diagonal terms belong in ``lin``.
    """

    n: int
    generators: BinMatrix
    quad: Tuple[Tuple[int, int], ...] = ()
    lin: Optional[BitVec] = None

    def __post_init__(self) -> None:
        if self.generators.n_cols != self.n:
            raise ValueError("generator length differs from qubit count")
        if self.lin is None:
            object.__setattr__(self, "lin", BitVec.zeros(self.n))
        if self.lin.n != self.n:
            raise ValueError("linear phase length differs from qubit count")
        for a, b in self.quad:
            if not (0 <= a < b < self.n):
                raise ValueError(f"quadratic pair ({a},{b}) not strictly upper triangular")
        if len(set(self.quad)) != len(self.quad):
            raise ValueError("duplicate quadratic pair")
        basis = echelon_words(self.generators.row_words())
        if len(basis) != self.generators.n_rows:
            raise ValueError("generator rows are dependent")
        object.__setattr__(self, "_basis", basis)

    @property
    def k(self) -> int:
        return self.generators.n_rows

    @property
    def size(self) -> int:
        """|S| = 2^k."""
        return 1 << self.k

    def contains(self, v: BitVec) -> bool:
        if v.n != self.n:
            raise ValueError("length mismatch")
        return in_span_words(v.word, self._basis)

    @cached_property
    def span(self) -> List[int]:
        return list(span_words(self.generators.row_words()))

    @cached_property
    def span_u64(self) -> np.ndarray:
        return span_array(self.generators.row_words(), self.n)

    @cached_property
    def _quad_rows(self) -> Dict[int, int]:
        rows: Dict[int, int] = {}
        for a, b in self.quad:
            rows[a] = rows.get(a, 0) | (1 << b)
        return rows

    def quad_eval(self, x: int) -> int:
        """Q(x) mod 2."""
        acc = 0
        for a, row in self._quad_rows.items():
            if (x >> a) & 1:
                acc ^= (x & row).bit_count() & 1
        return acc

    def phase_bit(self, x: int) -> int:
        """Sign exponent Q(x) + lin.x mod 2 of the amplitude at x."""
        return self.quad_eval(x) ^ ((x & self.lin.word).bit_count() & 1)


@dataclass(frozen=True)
class AngleSpec:
    """Measurement angles pi * a_j / 2^D with every numerator a_j odd."""

    D: int
    numerators: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.D < 1:
            raise ValueError("denominator exponent D must be >= 1")
        for a in self.numerators:
            if a % 2 == 0:
                raise ValueError(f"numerator {a} is even; angles must stay off the Pauli axes")

    @classmethod
    def uniform(cls, d: int, n: int, numerator: int = 1) -> "AngleSpec":
        return cls(d, (numerator,) * n)

    @property
    def n(self) -> int:
        return len(self.numerators)

    def is_uniform(self) -> bool:
        return len(set(self.numerators)) <= 1

    def angle(self, j: int) -> float:
        import math

        return math.pi * self.numerators[j] / (1 << self.D)


@dataclass(frozen=True)
class CorrelationContext:
    """Support ``z`` and basis-choice bits ``q`` of a correlation operator."""

    z: BitVec
    q: BitVec

    def __post_init__(self) -> None:
        if self.z.n != self.q.n:
            raise ValueError("support and basis-choice lengths differ")


@dataclass(frozen=True)
class CyclotomicSum:
    """(1/norm) * sum over exponents e of counts[e] * w^e, w = exp(i pi / 2^D).

    The modulus is M = 2^(D+1).  The histogram is empty (total mass zero)
    exactly when the correlation support falls outside the state's span.
    """

    modulus: int
    counts: Tuple[int, ...]
    norm: int

    def __post_init__(self) -> None:
        if len(self.counts) != self.modulus:
            raise ValueError("histogram length differs from modulus")
        if self.norm <= 0:
            raise ValueError("norm must be positive")

    @property
    def total_mass(self) -> int:
        return sum(self.counts)

    def value(self) -> complex:
        acc = 0j
        for e, c in enumerate(self.counts):
            if c:
                acc += c * cmath.exp(1j * cmath.pi * 2 * e / self.modulus)
        return acc / self.norm

    def support(self) -> List[int]:
        return [e for e, c in enumerate(self.counts) if c]


@dataclass(frozen=True)
class ExtremalResult:
    """Classification of a cyclotomic sum: +-1, some other unit phase, or neither."""

    kind: str  # "extremal" | "non_extremal" | "non_real_extremal"
    bit: Optional[int] = None
    exponent: Optional[int] = None

    EXTREMAL = "extremal"
    NON_EXTREMAL = "non_extremal"
    NON_REAL_EXTREMAL = "non_real_extremal"

    @classmethod
    def extremal(cls, bit: int) -> "ExtremalResult":
        return cls(cls.EXTREMAL, bit=bit)

    @classmethod
    def non_extremal(cls) -> "ExtremalResult":
        return cls(cls.NON_EXTREMAL)

    @classmethod
    def non_real(cls, exponent: int) -> "ExtremalResult":
        return cls(cls.NON_REAL_EXTREMAL, exponent=exponent)

    @property
    def is_extremal(self) -> bool:
        return self.kind == self.EXTREMAL


def make_rm_state(r: int, m: int) -> PhaseCosetState:
    """Uniform superposition over all codewords of R(r,m) on 2^m qubits."""
    from .reedmuller import rm_basis

    code = rm_basis(r, m)
    return PhaseCosetState(code.length, code.basis)


def expectation(
    state: PhaseCosetState, angles: AngleSpec, ctx: CorrelationContext
) -> CyclotomicSum:
    """Exact expectation value of the correlation operator over ``ctx``.

    Each span element x contributes one unit of mass at the exponent

        e(x) = sum_{j in z} a_j * (-1)^{x_j + q_j}  +  2^D * (dQ(x) + lin.z)

    mod 2^(D+1), where dQ(x) = Q(x) + Q(x + z) mod 2: the local-operator
    phases in units of pi/2^D plus the sign change of the flipped amplitude.
    If z lies outside the span the flip maps the support off itself and the
    histogram is empty.
    """
    if angles.n != state.n:
        raise ValueError("angle count differs from qubit count")
    if ctx.z.n != state.n:
        raise ValueError("context length differs from qubit count")
    d = angles.D
    modulus = 1 << (d + 1)
    half = 1 << d
    if not state.contains(ctx.z):
        return CyclotomicSum(modulus, (0,) * modulus, state.size)
    z = ctx.z.word
    q = ctx.q.word
    lin_z = (state.lin.word & z).bit_count() & 1
    counts = [0] * modulus
    has_quad = bool(state.quad)
    if angles.is_uniform():
        a = angles.numerators[0] if angles.numerators else 1
        z_weight = ctx.z.weight
        for x in state.span:
            flips = ((x ^ q) & z).bit_count()
            e = a * (z_weight - 2 * flips)
            if has_quad:
                e += half * (state.quad_eval(x) ^ state.quad_eval(x ^ z))
            e = (e + half * lin_z) % modulus
            counts[e] += 1
    else:
        site_a = [(j, angles.numerators[j]) for j in range(state.n) if (z >> j) & 1]
        for x in state.span:
            flipped = (x ^ q) & z
            e = 0
            for j, a_j in site_a:
                e += -a_j if (flipped >> j) & 1 else a_j
            if has_quad:
                e += half * (state.quad_eval(x) ^ state.quad_eval(x ^ z))
            e = (e + half * lin_z) % modulus
            counts[e] += 1
    return CyclotomicSum(modulus, tuple(counts), state.size)


def extremal_bit(s: CyclotomicSum) -> ExtremalResult:
    """Classify a sum as +1 / -1 (output bit 0 / 1), another unit phase, or neither."""
    support = s.support()
    if len(support) != 1 or s.total_mass != s.norm:
        return ExtremalResult.non_extremal()
    (e,) = support
    if e == 0:
        return ExtremalResult.extremal(0)
    if e == s.modulus // 2:
        return ExtremalResult.extremal(1)
    return ExtremalResult.non_real(e)


def x_stabilizer_expectation(state: PhaseCosetState, z: BitVec) -> Fraction:
    """Exact expectation of the X-type flip operator on support ``z``.

    Pure parity count over the span (no measurement angles involved): the
    value is (1/|S|) * sum over x of (-1)^{Q(x) + Q(x+z) + lin.z} when z is in
    the span, and 0 otherwise.
    """
    if z.n != state.n:
        raise ValueError("length mismatch")
    if not state.contains(z):
        return Fraction(0)
    lin_z = (state.lin.word & z.word).bit_count() & 1
    acc = 0
    for x in state.span:
        p = state.quad_eval(x) ^ state.quad_eval(x ^ z.word) ^ lin_z
        acc += -1 if p else 1
    return Fraction(acc, state.size)


def state_to_dict(state: PhaseCosetState) -> Dict[str, object]:
    return {
        "n": state.n,
        "generators": state.generators.to_lists(),
        "quad": [list(p) for p in state.quad],
        "lin": state.lin.to_bits(),
    }


def state_from_dict(data: Dict[str, object]) -> PhaseCosetState:
    n = int(data["n"])
    gens = data.get("generators") or []
    matrix = BinMatrix.from_rows([BitVec.from_bits(r) for r in gens], n_cols=n)
    quad = tuple(tuple(int(v) for v in pair) for pair in data.get("quad", ()))
    lin = BitVec.from_bits(data.get("lin", [0] * n))
    return PhaseCosetState(n, matrix, quad, lin)
