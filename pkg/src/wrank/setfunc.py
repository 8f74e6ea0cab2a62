"""Set functions as points of R^(2^n - 1), the polymatroid cone, and exact
vertex certification.

A :class:`SetFunctionVector` stores one value per nonempty subset, indexed by
bitmask; the value on the empty set is implicitly 0. Values are normally
``Fraction``; float-valued vectors (brute-force entropies) are allowed and
the checkers take a ``tol`` for them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .linalg import RationalMatrix, rational_rank
from .matroid import MAX_EXHAUSTIVE, as_weights, elements

MAX_POLYTOPE_N = 5


class SetFunctionVector:
    def __init__(self, n: int, values: Sequence):
        if n < 1:
            raise ValueError("n must be at least 1")
        values = tuple(values)
        if len(values) != (1 << n) - 1:
            raise ValueError(f"expected {(1 << n) - 1} values for n={n}, got {len(values)}")
        self.n = n
        self.values = values

    @classmethod
    def from_function(cls, n: int, f) -> SetFunctionVector:
        return cls(n, [f(s) for s in range(1, 1 << n)])

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[int, object]) -> SetFunctionVector:
        missing = [s for s in range(1, 1 << n) if s not in mapping]
        if missing:
            raise ValueError(f"missing subsets, first is {missing[0]:#x}")
        return cls(n, [mapping[s] for s in range(1, 1 << n)])

    def __getitem__(self, s: int):
        if s == 0:
            return 0
        return self.values[s - 1]

    def __len__(self):
        return len(self.values)

    def items(self):
        return ((s, self.values[s - 1]) for s in range(1, 1 << self.n))

    def __eq__(self, other):
        return isinstance(other, SetFunctionVector) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        return f"SetFunctionVector(n={self.n}, values={[str(v) for v in self.values]})"

    def combine(self, other: SetFunctionVector, alpha) -> SetFunctionVector:
        """``alpha * self + (1 - alpha) * other``."""
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        alpha = Fraction(alpha)
        return SetFunctionVector(self.n, [alpha * a + (1 - alpha) * b
                                          for a, b in zip(self.values, other.values)])


class SubmodularViolation(NamedTuple):
    base: int  # the set A, as a bitmask
    i: int  # 1-based element label
    j: int


class MonotoneViolation(NamedTuple):
    base: int
    i: int


def check_submodular(v: SetFunctionVector, tol=0) -> tuple[bool, SubmodularViolation | None]:
    """Elemental test: ``v(A+i) + v(A+j) >= v(A+i+j) + v(A)`` for i != j not in A.

    Returns ``(True, None)`` or ``(False, first_violation)``; violations are
    scanned with A ascending, then i, then j.
    """
    n = v.n
    if n > MAX_EXHAUSTIVE:
        raise ValueError(f"limited to n <= {MAX_EXHAUSTIVE}")
    full = (1 << n) - 1
    for a in range(full + 1):
        rest = elements(full & ~a)
        for i, j in combinations(rest, 2):
            ai, aj = a | (1 << i), a | (1 << j)
            if v[ai] + v[aj] - v[ai | aj] - v[a] < -tol:
                return False, SubmodularViolation(a, i + 1, j + 1)
    return True, None


def check_submodular_pairwise(v: SetFunctionVector, tol=0) -> tuple[bool, tuple[int, int] | None]:
    """``v(A) + v(B) >= v(A|B) + v(A&B)`` over every pair of subsets."""
    size = 1 << v.n
    for a in range(size):
        for b in range(a + 1, size):
            if v[a] + v[b] - v[a | b] - v[a & b] < -tol:
                return False, (a, b)
    return True, None


def check_monotone(v: SetFunctionVector, tol=0) -> tuple[bool, MonotoneViolation | None]:
    """``v(A) <= v(A + i)`` for every A and i not in A (``v(empty) = 0``)."""
    full = (1 << v.n) - 1
    for a in range(full + 1):
        for i in elements(full & ~a):
            if v[a | (1 << i)] - v[a] < -tol:
                return False, MonotoneViolation(a, i + 1)
    return True, None


@dataclass(frozen=True)
class LinearConstraint:
    """``sum(coeffs[s] * h_s) >= rhs`` or ``== rhs``; coeffs sparse by bitmask."""

    coeffs: tuple[tuple[int, Fraction], ...]
    sense: str  # ">=" or "=="
    rhs: Fraction = Fraction(0)
    kind: str = ""

    def __post_init__(self):
        if self.sense not in (">=", "=="):
            raise ValueError(f"unknown sense {self.sense!r}")
        if not any(c for _, c in self.coeffs):
            raise ValueError("constraint normal is zero")

    def evaluate(self, v: SetFunctionVector):
        return sum((c * v[s] for s, c in self.coeffs), Fraction(0))

    def slack(self, v: SetFunctionVector):
        return self.evaluate(v) - self.rhs

    def satisfied(self, v: SetFunctionVector) -> bool:
        s = self.slack(v)
        return s == 0 if self.sense == "==" else s >= 0

    def normal(self, n: int) -> list[Fraction]:
        row = [Fraction(0)] * ((1 << n) - 1)
        for s, c in self.coeffs:
            row[s - 1] += c
        return row


def _constraint(terms: Iterable[tuple[int, int]], sense=">=", rhs=0, kind="") -> LinearConstraint:
    merged: dict[int, Fraction] = {}
    for s, c in terms:
        if s:  # h of the empty set is 0
            merged[s] = merged.get(s, Fraction(0)) + c
    coeffs = tuple(sorted((s, c) for s, c in merged.items() if c))
    return LinearConstraint(coeffs, sense, Fraction(rhs), kind)


@dataclass(frozen=True)
class ConeDescription:
    n: int
    constraints: tuple[LinearConstraint, ...] = field(repr=False)

    def count(self, kind: str) -> int:
        return sum(c.kind == kind for c in self.constraints)

    def feasible(self, v: SetFunctionVector) -> bool:
        return v.n == self.n and all(c.satisfied(v) for c in self.constraints)

    def first_violated(self, v: SetFunctionVector) -> int | None:
        for idx, c in enumerate(self.constraints):
            if not c.satisfied(v):
                return idx
        return None


def gamma_polytope(n: int, w: Sequence) -> ConeDescription:
    """Polymatroid cone intersected with the singleton plane ``h_{a} = w(a)``.

    Constraint kinds, in order:

    * ``nonneg``: ``h_A >= 0`` for every nonempty A,
    * ``monotone``: ``h_N >= h_{N - i}`` for each i (omitted when n = 1,
      where it coincides with nonnegativity),
    * ``submodular``: ``h_{K+i} + h_{K+j} >= h_{K+i+j} + h_K`` for
      i < j and K within the remaining elements,
    * ``singleton``: ``h_{a} = w(a)``.

    The elemental monotone and submodular rows generate every Shannon
    inequality, so this cuts out the same polyhedron as the full list.
    """
    if n > MAX_POLYTOPE_N:
        raise ValueError(f"cone description limited to n <= {MAX_POLYTOPE_N}")
    w = as_weights(w, n)
    full = (1 << n) - 1
    rows = [_constraint([(s, 1)], kind="nonneg") for s in range(1, full + 1)]
    if n > 1:
        rows += [_constraint([(full, 1), (full & ~(1 << i), -1)], kind="monotone")
                 for i in range(n)]
    for i, j in combinations(range(n), 2):
        rest = full & ~((1 << i) | (1 << j))
        k = rest
        subsets = []
        while True:  # all submasks of rest
            subsets.append(k)
            if k == 0:
                break
            k = (k - 1) & rest
        for k in sorted(subsets):
            bi, bj = 1 << i, 1 << j
            rows.append(_constraint([(k | bi, 1), (k | bj, 1), (k | bi | bj, -1), (k, -1)],
                                    kind="submodular"))
    rows += [_constraint([(1 << a, 1)], "==", w[a], kind="singleton") for a in range(n)]
    return ConeDescription(n, tuple(rows))


class InfeasiblePointError(ValueError):
    """Raised when a vertex test is asked about a point outside the polytope."""

    def __init__(self, index: int, constraint: LinearConstraint):
        super().__init__(f"point violates constraint #{index} ({constraint.kind})")
        self.index = index
        self.constraint = constraint


class VertexCertificate(NamedTuple):
    is_vertex: bool
    tight: tuple[int, ...]  # indices into desc.constraints
    rank: int


def is_extreme_point(desc: ConeDescription, v: SetFunctionVector) -> VertexCertificate:
    """Decide whether ``v`` is a vertex of the polytope described by ``desc``.

    ``v`` is a vertex iff the normals of the constraints tight at ``v`` span
    the whole space, i.e. have rank ``2^n - 1``. All arithmetic is exact.
    """
    bad = desc.first_violated(v)
    if bad is not None:
        raise InfeasiblePointError(bad, desc.constraints[bad])
    tight = tuple(idx for idx, c in enumerate(desc.constraints) if c.slack(v) == 0)
    dim = (1 << desc.n) - 1
    mat = RationalMatrix(len(tight), dim,
                         tuple(tuple(desc.constraints[i].normal(desc.n)) for i in tight))
    r = rational_rank(mat)
    return VertexCertificate(r == dim, tight, r)


def segment_parameter(v: SetFunctionVector, a: SetFunctionVector, b: SetFunctionVector):
    """The ``alpha`` with ``v = alpha*a + (1-alpha)*b``, or None if there is none."""
    if not v.n == a.n == b.n:
        raise ValueError("dimension mismatch")
    alpha = None
    for x, p, q in zip(v.values, a.values, b.values):
        d = Fraction(p) - Fraction(q)
        if d == 0:
            if x != q:
                return None
            continue
        cand = (Fraction(x) - Fraction(q)) / d
        if alpha is None:
            alpha = cand
        elif cand != alpha:
            return None
    return alpha


def refute_convexity(desc: ConeDescription | None, v: SetFunctionVector,
                     a: SetFunctionVector, b: SetFunctionVector) -> bool:
    """True iff ``v`` lies strictly inside the segment from ``a`` to ``b``.

    When ``desc`` is given, a pair with an infeasible endpoint never counts
    as a decomposition. Identical endpoints never do either.
    """
    if a == b:
        return False
    if desc is not None and not (desc.feasible(a) and desc.feasible(b)):
        return False
    alpha = segment_parameter(v, a, b)
    return alpha is not None and 0 < alpha < 1


def reflection_pairs(v: SetFunctionVector, rng, count: int) -> list[tuple[SetFunctionVector, SetFunctionVector]]:
    """Pairs ``(v + eps*d, v - eps*d)`` for random sparse directions ``d``.

    Singleton coordinates are left alone since the polytope pins them.
    ``rng`` is a ``random.Random``. If ``v`` is not a vertex, some direction
    keeps both ends feasible, and then :func:`refute_convexity` accepts the
    pair.
    """
    free = [s for s in range(1, 1 << v.n) if s.bit_count() > 1]
    pairs = []
    for _ in range(count):
        d = [Fraction(0)] * len(v.values)
        if free:
            for s in rng.sample(free, rng.randint(1, len(free))):
                d[s - 1] = Fraction(rng.choice((-2, -1, 1, 2)))
        eps = Fraction(1, rng.choice((1, 2, 4, 8, 16, 64)))
        a = SetFunctionVector(v.n, [x + eps * y for x, y in zip(v.values, d)])
        b = SetFunctionVector(v.n, [x - eps * y for x, y in zip(v.values, d)])
        pairs.append((a, b))
    return pairs
