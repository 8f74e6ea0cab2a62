"""Matroids on the ground set {1, ..., n} and their weighted rank functions.

Subsets are integer bitmasks: bit ``i - 1`` set means element ``i`` is in
the subset. Three concrete representations are provided (binary, graphic,
uniform); all share the independence/rank oracle interface of
:class:`Matroid`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import BitMatrix, gf2_rank_vectors, gf2_reduce

MAX_EXHAUSTIVE = 20


def elements(mask: int) -> list[int]:
    """0-based indices of the bits set in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(items: Iterable[int]) -> int:
    """Bitmask from 1-based element labels."""
    m = 0
    for e in items:
        if e < 1:
            raise ValueError(f"element labels start at 1, got {e}")
        m |= 1 << (e - 1)
    return m


def labels(mask: int) -> list[int]:
    """1-based element labels of ``mask``."""
    return [i + 1 for i in elements(mask)]


class Matroid:
    """Common interface. Subclasses implement :meth:`rank`."""

    n: int

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def _check(self, s: int):
        if s < 0 or s >> self.n:
            raise ValueError(f"subset {s:#x} is not within a ground set of size {self.n}")

    def rank(self, s: int) -> int:
        raise NotImplementedError

    def is_independent(self, s: int) -> bool:
        return self.rank(s) == s.bit_count()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        raise NotImplementedError


class BinaryMatroid(Matroid):
    """Column matroid of a matrix over GF(2).

    ``columns[e]`` packs column ``e`` as an integer (bit ``r`` = row ``r``).
    """

    def __init__(self, columns: Sequence[int], rows: int):
        if not columns:
            raise ValueError("ground set must be nonempty")
        self.columns = tuple(columns)
        self.rows = rows
        self.n = len(self.columns)
        for c in self.columns:
            if c < 0 or c >> rows:
                raise ValueError(f"column {c:#x} does not fit in {rows} rows")

    @classmethod
    def from_matrix(cls, m: BitMatrix) -> BinaryMatroid:
        return cls([m.column(c) for c in range(m.cols)], m.rows)

    @classmethod
    def from_column_strings(cls, cols: Sequence[str]) -> BinaryMatroid:
        """Columns given as bit strings; leftmost character is row 0."""
        if not cols:
            raise ValueError("ground set must be nonempty")
        rows = len(cols[0])
        packed = []
        for s in cols:
            if len(s) != rows:
                raise ValueError("column strings must have equal length")
            if set(s) - {"0", "1"}:
                raise ValueError(f"column {s!r} is not a bit string")
            packed.append(sum(int(ch) << r for r, ch in enumerate(s)))
        return cls(packed, rows)

    def matrix(self) -> BitMatrix:
        return BitMatrix.from_columns(self.columns, self.rows)

    def rank(self, s: int) -> int:
        self._check(s)
        return gf2_rank_vectors(self.columns[i] for i in elements(s))

    def _key(self):
        return (self.rows, self.columns)

    def __repr__(self):
        return f"BinaryMatroid(n={self.n}, rows={self.rows})"


class _DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; vertices are ``0..vertices-1``.

    Parallel edges and self-loops are allowed. A self-loop is a dependent
    singleton.
    """

    def __init__(self, vertices: int, edges: Sequence[tuple[int, int]]):
        if not edges:
            raise ValueError("ground set must be nonempty")
        self.vertices = vertices
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.n = len(self.edges)
        for u, v in self.edges:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{vertices - 1}")

    def rank(self, s: int) -> int:
        self._check(s)
        ds = _DisjointSet(self.vertices)
        return sum(ds.union(*self.edges[i]) for i in elements(s))

    def incidence(self) -> BinaryMatroid:
        """Binary representation: vertex-edge incidence matrix over GF(2)."""
        cols = [0 if u == v else (1 << u) | (1 << v) for u, v in self.edges]
        return BinaryMatroid(cols, self.vertices)

    def _key(self):
        return (self.vertices, self.edges)

    def __repr__(self):
        return f"GraphicMatroid(vertices={self.vertices}, edges={list(self.edges)})"


class UniformMatroid(Matroid):
    def __init__(self, r: int, n: int):
        if n < 1 or not 0 <= r <= n:
            raise ValueError(f"need 0 <= r <= n and n >= 1, got r={r}, n={n}")
        self.r = r
        self.n = n

    def rank(self, s: int) -> int:
        self._check(s)
        return min(s.bit_count(), self.r)

    def _key(self):
        return (self.r, self.n)

    def __repr__(self):
        return f"UniformMatroid({self.r}, {self.n})"


def as_weights(w: Iterable, n: int | None = None) -> tuple[Fraction, ...]:
    """Normalize a weight function to a tuple of nonnegative Fractions.

    Accepts ints, Fractions, or ``"p/q"`` strings. Floats are converted
    exactly, which is rarely what callers want.
    """
    out = tuple(Fraction(x) for x in w)
    if n is not None and len(out) != n:
        raise ValueError(f"expected {n} weights, got {len(out)}")
    if any(x < 0 for x in out):
        raise ValueError("weights must be nonnegative")
    return out


def _greedy_order(s: int, w: Sequence[Fraction]) -> list[int]:
    # descending weight, ascending index on ties
    return sorted(elements(s), key=lambda i: (-w[i], i))


def max_weight_independent(m: Matroid, w: Sequence, s: int | None = None) -> int:
    """Greedy maximum-weight independent subset of ``s`` (default: ground set)."""
    if s is None:
        s = m.full
    m._check(s)
    w = as_weights(w, m.n)
    if isinstance(m, BinaryMatroid):
        basis: dict[int, int] = {}
        chosen = 0
        for i in _greedy_order(s, w):
            v = gf2_reduce(basis, m.columns[i])
            if v:
                basis[v.bit_length() - 1] = v
                chosen |= 1 << i
        return chosen
    if isinstance(m, GraphicMatroid):
        ds = _DisjointSet(m.vertices)
        chosen = 0
        for i in _greedy_order(s, w):
            if ds.union(*m.edges[i]):
                chosen |= 1 << i
        return chosen
    chosen = 0
    for i in _greedy_order(s, w):
        if m.is_independent(chosen | (1 << i)):
            chosen |= 1 << i
    return chosen


def weighted_rank(m: Matroid, w: Sequence, s: int) -> Fraction:
    """Maximum total weight of an independent subset of ``s``."""
    w = as_weights(w, m.n)
    return sum((w[i] for i in elements(max_weight_independent(m, w, s))), Fraction(0))


def circuits(m: Matroid) -> list[int]:
    """All circuits, as bitmasks sorted ascending.

    Dependent sets are scanned by increasing size and a dependent set is a
    circuit iff it contains no circuit already found.
    """
    if m.n > MAX_EXHAUSTIVE:
        raise ValueError(f"circuit enumeration limited to n <= {MAX_EXHAUSTIVE}")
    found: list[int] = []
    for size in range(1, m.n + 1):
        for combo in combinations(range(m.n), size):
            s = sum(1 << i for i in combo)
            if any(c & s == c for c in found):
                continue
            if not m.is_independent(s):
                found.append(s)
    return sorted(found)


def is_circuit(m: Matroid, s: int) -> bool:
    """Dependent, and independent after deleting any one element."""
    return s != 0 and not m.is_independent(s) and all(
        m.is_independent(s & ~(1 << i)) for i in elements(s))


def find_circuit(m: Matroid, s: int) -> int | None:
    """Some circuit inside ``s``, or None when ``s`` is independent.

    Shrinks a dependent set by dropping elements while it stays dependent;
    the result is minimal dependent.
    """
    if m.is_independent(s):
        return None
    for i in elements(s):
        t = s & ~(1 << i)
        if not m.is_independent(t):
            s = t
    return s


def reverse_delete_base(m: Matroid, w: Sequence) -> int:
    """Base obtained by repeatedly deleting the lightest element of a circuit.

    The surviving set is a maximum-weight base. Among equally light
    elements the largest index goes first, so the result coincides with the
    greedy base (which prefers small indices). Circuits are located by
    :func:`find_circuit`.
    """
    w = as_weights(w, m.n)
    s = m.full
    while True:
        c = find_circuit(m, s)
        if c is None:
            return s
        lightest = min(elements(c), key=lambda i: (w[i], -i))
        s &= ~(1 << lightest)


def loops(m: Matroid) -> int:
    """Mask of the elements of rank 0."""
    return mask_of(i + 1 for i in range(m.n) if m.rank(1 << i) == 0)


def effective_weights(m: Matroid, w: Sequence) -> tuple[Fraction, ...]:
    """``w`` with loops set to 0.

    The weighted rank never counts a loop, so this leaves phi unchanged and
    makes ``phi({a}) == w(a)`` hold for every element.
    """
    w = as_weights(w, m.n)
    lp = loops(m)
    return tuple(Fraction(0) if lp >> i & 1 else x for i, x in enumerate(w))


def phi_vector(m: Matroid, w: Sequence):
    """Weighted rank of every nonempty subset, as a SetFunctionVector."""
    from .setfunc import SetFunctionVector

    if m.n > MAX_EXHAUSTIVE:
        raise ValueError(f"subset sweep limited to n <= {MAX_EXHAUSTIVE}")
    w = as_weights(w, m.n)
    return SetFunctionVector(m.n, [weighted_rank(m, w, s) for s in range(1, 1 << m.n)])


def rank_vector(m: Matroid):
    from .setfunc import SetFunctionVector

    if m.n > MAX_EXHAUSTIVE:
        raise ValueError(f"subset sweep limited to n <= {MAX_EXHAUSTIVE}")
    return SetFunctionVector(m.n, [Fraction(m.rank(s)) for s in range(1, 1 << m.n)])


def to_binary(m: Matroid) -> BinaryMatroid:
    """A GF(2) representation of ``m`` with the same element order.

    Graphic matroids use their incidence matrix. Uniform matroids are binary
    only for r in {0, 1, n - 1, n}; any other uniform matroid raises.
    """
    if isinstance(m, BinaryMatroid):
        return m
    if isinstance(m, GraphicMatroid):
        return m.incidence()
    if isinstance(m, UniformMatroid):
        r, n = m.r, m.n
        if r == 0:
            return BinaryMatroid([0] * n, 1)
        if r == n:
            return BinaryMatroid([1 << i for i in range(n)], n)
        if r == 1:
            return BinaryMatroid([1] * n, 1)
        if r == n - 1:
            return BinaryMatroid([1 << i for i in range(r)] + [(1 << r) - 1], r)
        raise ValueError(f"U({r},{n}) is not binary")
    raise TypeError(f"no binary representation for {type(m).__name__}")


# -- small named matroids -------------------------------------------------

def fano() -> BinaryMatroid:
    """The seven nonzero vectors of GF(2)^3, in order 1..7 as integers."""
    return BinaryMatroid(list(range(1, 8)), 3)


def triangle() -> GraphicMatroid:
    return GraphicMatroid(3, [(0, 1), (1, 2), (0, 2)])


def complete_graph(k: int) -> GraphicMatroid:
    return GraphicMatroid(k, list(combinations(range(k), 2)))


def cycle_graph(length: int) -> GraphicMatroid:
    return GraphicMatroid(length, [(i, (i + 1) % length) for i in range(length)])
