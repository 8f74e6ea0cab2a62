"""Exact linear algebra: bit matrices over GF(2), rational matrices, and
integer matrices acting on Z_k.

Bit matrices store each row as a Python ``int``; bit ``c`` of row ``r`` is
the entry in column ``c``. Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors


def _row_from_bits(bits: Sequence[int] | str) -> int:
    if isinstance(bits, str):
        bits = [int(ch) for ch in bits]
    out = 0
    for c, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit entries must be 0 or 1, got {b!r}")
        out |= b << c
    return out


@dataclass(frozen=True)
class BitMatrix:
    """Dense matrix over GF(2) with rows packed into integers."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for r in self.data:
            if not 0 <= r < limit:
                raise ValueError(f"row {r:#x} does not fit in {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int] | str], cols: int | None = None) -> BitMatrix:
        """Build from 0/1 sequences or strings like ``"101"`` (leftmost = column 0)."""
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_row_from_bits(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], rows: int) -> BitMatrix:
        """Build from integer column vectors (bit ``r`` = entry in row ``r``)."""
        data = []
        for r in range(rows):
            data.append(sum(((col >> r) & 1) << c for c, col in enumerate(columns)))
        return cls(rows, len(columns), tuple(data))

    def entry(self, r: int, c: int) -> int:
        return (self.data[r] >> c) & 1

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_columns(self.data, self.cols)

    def column(self, c: int) -> int:
        return sum(((row >> c) & 1) << r for r, row in enumerate(self.data))

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(r, c) for c in range(self.cols)] for r in range(self.rows)]


def gf2_basis(vectors: Iterable[int]) -> dict[int, int]:
    """Reduce integer bit vectors to an echelon basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return basis


def gf2_rank_vectors(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of bit vectors packed into integers."""
    return len(gf2_basis(vectors))


def gf2_rank(m: BitMatrix) -> int:
    return gf2_rank_vectors(m.data)


def gf2_reduce(basis: dict[int, int], v: int) -> int:
    while v:
        lead = v.bit_length() - 1
        if lead not in basis:
            return v
        v ^= basis[lead]
    return 0


def gf2_in_rowspace(m: BitMatrix, v: Sequence[int] | str | int) -> bool:
    """True iff ``v`` is a GF(2) combination of the rows of ``m``.

    ``v`` may be a packed integer or a 0/1 sequence of length ``m.cols``.
    """
    if isinstance(v, int):
        if v >> m.cols:
            raise ValueError("vector has more bits than the matrix has columns")
        packed = v
    else:
        if len(v) != m.cols:
            raise ValueError(f"vector length {len(v)} != {m.cols} columns")
        packed = _row_from_bits(v)
    return gf2_reduce(gf2_basis(m.data), packed) == 0


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> RationalMatrix:
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged rows")
        return cls(len(data), cols, data)


def rational_rank(m: RationalMatrix | Sequence[Sequence]) -> int:
    """Exact rank by Gaussian elimination over the rationals."""
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_rows(m)
    work = [list(r) for r in m.entries]
    rank = 0
    for c in range(m.cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        inv = 1 / prow[c]
        for i in range(rank + 1, len(work)):
            f = work[i][c]
            if f:
                f *= inv
                row = work[i]
                for j in range(c, m.cols):
                    if prow[j]:
                        row[j] -= f * prow[j]
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass(frozen=True)
class ZkMatrix:
    """Integer matrix with entries reduced modulo ``k``."""

    k: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("modulus must be at least 2")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("shape mismatch")
        if any(not 0 <= x < self.k for r in self.entries for x in r):
            raise ValueError("entries must be reduced mod k")

    @classmethod
    def from_rows(cls, k: int, rows: Iterable[Iterable[int]], cols: int | None = None) -> ZkMatrix:
        data = tuple(tuple(x % k for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(k, len(data), cols, data)

    def select_columns(self, cols: Sequence[int]) -> ZkMatrix:
        return ZkMatrix(self.k, self.rows, len(cols),
                        tuple(tuple(r[c] for c in cols) for r in self.entries))


def zk_image_size(m: ZkMatrix) -> int:
    """Number of distinct row vectors ``x^T M mod k`` over all ``x`` in Z_k^rows.

    With Smith form ``M = U D V`` over the integers, the image is isomorphic
    to the direct sum of ``d_i Z_k`` and each summand has ``k / gcd(d_i, k)``
    elements (a zero invariant factor contributes 1).
    """
    if m.rows == 0 or m.cols == 0:
        return 1
    dm = DomainMatrix([[ZZ(x) for x in r] for r in m.entries], (m.rows, m.cols), ZZ)
    factors = invariant_factors(dm)
    return prod(m.k // gcd(int(d), m.k) for d in factors)
