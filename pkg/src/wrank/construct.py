"""Random-variable constructions that realize weighted rank functions as
joint entropies, with an exact algebraic entropy oracle and an independent
brute-force oracle for each.

Binary construction: for a GF(2) matrix with columns ``v_e`` and integer
weights, draw a ``w_max x m`` matrix of iid fair bits ``X`` and let element
``e`` be the tuple ``(X_1 v_e, ..., X_{w_e} v_e)``. Every coordinate is a
linear functional of the ``w_max * m`` bits, so a joint entropy equals the
GF(2) rank of the stacked functionals.

Graphic Z_k construction: vertices carry iid uniform ``X_v`` on Z_k and edge
``u -> v`` carries ``X_v - X_u mod k``.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Sequence

from .dist import (EntropyValue, JointDistribution, conditional_entropy, entropy,
                   factorizes, is_uniform_on_support)
from .linalg import ZkMatrix, gf2_rank_vectors, zk_image_size
from .matroid import (BinaryMatroid, GraphicMatroid, Matroid, as_weights, elements, is_circuit,
                      to_binary, weighted_rank)

MAX_BIT_DIM = 16
MAX_ZK_ASSIGNMENTS = 1 << 20
DEFAULT_TOL = 1e-9


class PreconditionError(ValueError):
    """Input does not meet a verifier's stated precondition."""


def _integer_weights(w, n: int) -> tuple[int, ...]:
    w = as_weights(w, n)
    if any(x.denominator != 1 for x in w):
        raise ValueError("the binary construction needs integer weights")
    return tuple(int(x) for x in w)


@dataclass(frozen=True)
class BinaryConstruction:
    matroid: BinaryMatroid
    weights: tuple[int, ...]
    w_max: int
    bit_dim: int
    # rows[e][j] is the functional X_{j+1} v_e packed into the bit space:
    # block j occupies bits j*m .. j*m + m - 1
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.matroid.n


def build_binary(m: Matroid, w: Sequence) -> BinaryConstruction:
    """Assemble the block functionals for a binary (or graphic) matroid."""
    m = to_binary(m)
    weights = _integer_weights(w, m.n)
    w_max = max(weights)
    rows = tuple(tuple(m.columns[e] << (j * m.rows) for j in range(weights[e]))
                 for e in range(m.n))
    return BinaryConstruction(m, weights, w_max, w_max * m.rows, rows)


def algebraic_entropy_binary(c: BinaryConstruction, s: int) -> EntropyValue:
    """Exact joint entropy of the elements in ``s``: the GF(2) rank of their rows."""
    c.matroid._check(s)
    return EntropyValue(gf2_rank_vectors(r for e in elements(s) for r in c.rows[e]), 2)


def brute_force_distribution_binary(c: BinaryConstruction, max_dim: int = MAX_BIT_DIM) -> JointDistribution:
    """Enumerate all ``2^bit_dim`` equally likely bit assignments.

    Element ``e`` takes the value whose bit ``j`` is the parity of
    ``X_{j+1} v_e``; a weight-0 element is the constant 0.
    """
    if c.bit_dim > max_dim:
        raise ValueError(f"bit space dimension {c.bit_dim} exceeds cap {max_dim}")
    counts: dict[tuple, int] = {}
    rows = c.rows
    for x in range(1 << c.bit_dim):
        outcome = tuple(sum(((x & r).bit_count() & 1) << j for j, r in enumerate(er)) for er in rows)
        counts[outcome] = counts.get(outcome, 0) + 1
    variables = [(f"Y{e + 1}", 1 << c.weights[e]) for e in range(c.n)]
    return JointDistribution(variables, counts, 1 << c.bit_dim)


@dataclass
class SubsetCheck:
    subset: int
    expected: str
    algebraic: str | None = None
    bruteforce: float | None = None
    ok: bool = True


@dataclass
class Report:
    """Per-subset outcome of a verifier run."""

    claim: str
    passed: bool = True
    checks: list[SubsetCheck] = field(default_factory=list)
    failure: SubsetCheck | None = None
    notes: list[str] = field(default_factory=list)

    def add(self, check: SubsetCheck):
        self.checks.append(check)
        if not check.ok and self.passed:
            self.passed = False
            self.failure = check

    def to_dict(self) -> dict:
        def row(ch: SubsetCheck):
            d = asdict(ch)
            d["subset"] = f"{ch.subset:#x}"
            if ch.bruteforce is not None:
                d["bruteforce"] = float(f"{ch.bruteforce:.17g}")
            return d

        return {
            "claim": self.claim,
            "passed": self.passed,
            "failure": row(self.failure) if self.failure else None,
            "notes": list(self.notes),
            "checks": [row(ch) for ch in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def verify_theorem2(m: Matroid, w: Sequence, tol: float = DEFAULT_TOL, method: str = "both",
                    max_dim: int = MAX_BIT_DIM) -> Report:
    """Check that the binary construction's joint entropies equal the weighted rank.

    The algebraic path must agree exactly; the brute-force path within
    ``tol``. If the bit space is over ``max_dim`` the brute-force path is
    skipped with a warning and a note in the report.
    """
    if method not in ("algebraic", "bruteforce", "both"):
        raise ValueError(f"unknown method {method!r}")
    c = build_binary(m, w)
    weights = as_weights(w, m.n)
    report = Report("entropic")
    dist = None
    if method != "algebraic":
        if c.bit_dim <= max_dim:
            dist = brute_force_distribution_binary(c, max_dim)
        else:
            msg = f"bit space dimension {c.bit_dim} exceeds cap {max_dim}; brute force skipped"
            warnings.warn(msg)
            report.notes.append(msg)
            if method == "bruteforce":
                report.passed = False
                return report
    for s in range(1, 1 << m.n):
        phi = weighted_rank(m, weights, s)
        check = SubsetCheck(s, str(phi))
        if method != "bruteforce":
            alg = algebraic_entropy_binary(c, s)
            check.algebraic = str(alg)
            check.ok &= alg.rational_bits() == phi
        if dist is not None:
            h = entropy(dist, s)
            check.bruteforce = h
            check.ok &= abs(h - float(phi)) <= tol
        report.add(check)
    return report


def _lightest(c_mask: int, weights: Sequence) -> int:
    return min(elements(c_mask), key=lambda i: (weights[i], i))


def verify_lemma2(c: BinaryConstruction, circuit: int, superset: int,
                  dist: JointDistribution | None = None, tol: float = DEFAULT_TOL) -> bool:
    """Dropping the lightest element of ``circuit`` keeps the joint entropy of ``superset``.

    Checked exactly on the algebraic path and within ``tol`` by brute force
    (the distribution is built on demand when not supplied).
    """
    m = c.matroid
    if circuit & ~superset:
        raise ValueError("circuit must be contained in the superset")
    if not is_circuit(m, circuit):
        raise ValueError(f"{circuit:#x} is not a circuit")
    e = _lightest(circuit, c.weights)
    rest = superset & ~(1 << e)
    exact = algebraic_entropy_binary(c, superset) == algebraic_entropy_binary(c, rest)
    if dist is None:
        dist = brute_force_distribution_binary(c)
    h_full = entropy(dist, superset)
    h_rest = entropy(dist, rest) if rest else 0.0
    return exact and abs(h_full - h_rest) <= tol


def verify_lemma3_prop3(c: BinaryConstruction, ind: int, dist: JointDistribution | None = None) -> bool:
    """For an independent set: entropy equals the weight sum and the pmf factorizes.

    Both checks are exact (integer bits, rational pmf comparison).
    """
    if not c.matroid.is_independent(ind):
        raise ValueError(f"{ind:#x} is not independent")
    if ind == 0:
        return True
    total = sum(c.weights[e] for e in elements(ind))
    if algebraic_entropy_binary(c, ind).rational_bits() != total:
        return False
    if dist is None:
        dist = brute_force_distribution_binary(c)
    # each element must also be uniform on 2^w_e values, i.e. w_e fair bits
    return factorizes(dist, ind) and all(
        is_uniform_on_support(dist, e) == (True, 1 << c.weights[e]) for e in elements(ind))


@dataclass(frozen=True)
class GraphicZkConstruction:
    graph: GraphicMatroid
    k: int
    arcs: tuple[tuple[int, int], ...]  # (tail, head) per edge, tail = smaller id
    matrix: ZkMatrix  # vertex x edge, +1 at head, -1 at tail, mod k

    @property
    def n(self) -> int:
        return self.graph.n


def build_graphic_zk(graph: GraphicMatroid, k: int) -> GraphicZkConstruction:
    """Orient every edge from its smaller to its larger endpoint."""
    if k < 2:
        raise ValueError("k must be at least 2")
    arcs = tuple((min(u, v), max(u, v)) for u, v in graph.edges)
    entries = [[0] * graph.n for _ in range(graph.vertices)]
    for e, (t, h) in enumerate(arcs):
        if t != h:
            entries[h][e] = 1
            entries[t][e] = -1
    return GraphicZkConstruction(graph, k, arcs, ZkMatrix.from_rows(k, entries, graph.n))


def zk_exponent(c: GraphicZkConstruction, s: int) -> int:
    """``log_k`` of the number of values the edges in ``s`` jointly take."""
    c.graph._check(s)
    size = zk_image_size(c.matrix.select_columns(elements(s)))
    e = 0
    while size % c.k == 0 and size > 1:
        size //= c.k
        e += 1
    if size != 1:
        raise ValueError("image size is not a power of k")
    return e


def algebraic_entropy_zk(c: GraphicZkConstruction, s: int) -> EntropyValue:
    """Exact joint entropy of the edges in ``s``: ``log2`` of the image size.

    The edge variables are a surjective image of uniform vertex labels onto a
    subgroup, hence uniform on it.
    """
    return EntropyValue(zk_exponent(c, s), c.k)


def brute_force_distribution_zk(c: GraphicZkConstruction,
                                max_assignments: int = MAX_ZK_ASSIGNMENTS) -> JointDistribution:
    nv = c.graph.vertices
    if c.k ** nv > max_assignments:
        raise ValueError(f"{c.k}^{nv} assignments exceed cap {max_assignments}")
    k = c.k
    counts: dict[tuple, int] = {}
    for x in product(range(k), repeat=nv):
        outcome = tuple((x[h] - x[t]) % k for t, h in c.arcs)
        counts[outcome] = counts.get(outcome, 0) + 1
    return JointDistribution([(f"Y{e + 1}", k) for e in range(c.n)], counts, k ** nv)


def verify_theorem4(graph: GraphicMatroid, k: int, tol: float = DEFAULT_TOL, method: str = "both",
                    max_assignments: int = MAX_ZK_ASSIGNMENTS) -> Report:
    """Check ``H(Y_A) = rank(A) * log2(k)`` for every nonempty edge set A."""
    if method not in ("algebraic", "bruteforce", "both"):
        raise ValueError(f"unknown method {method!r}")
    c = build_graphic_zk(graph, k)
    report = Report("zk")
    dist = None
    if method != "algebraic":
        if k ** graph.vertices <= max_assignments:
            dist = brute_force_distribution_zk(c, max_assignments)
        else:
            msg = f"{k}^{graph.vertices} assignments exceed cap {max_assignments}; brute force skipped"
            warnings.warn(msg)
            report.notes.append(msg)
            if method == "bruteforce":
                report.passed = False
                return report
    logk = math.log2(k)
    for s in range(1, 1 << graph.n):
        r = graph.rank(s)
        check = SubsetCheck(s, str(EntropyValue(r, k)))
        if method != "bruteforce":
            alg = algebraic_entropy_zk(c, s)
            check.algebraic = str(alg)
            check.ok &= alg.coeff == r and alg.base == k
        if dist is not None:
            h = entropy(dist, s)
            check.bruteforce = h
            check.ok &= abs(h - r * logk) <= tol
        report.add(check)
    return report


@dataclass
class UniformityReport:
    passed: bool
    k: int | None = None
    failed_step: str | None = None
    detail: str = ""


def verify_circuit_uniformity(d: JointDistribution, w0: float, tol: float = DEFAULT_TOL) -> UniformityReport:
    """Check the consequences of realizing a constant-weight circuit profile.

    ``d`` must have the entropy profile of a circuit of size ``m`` with
    constant weight ``w0``: ``H(I) = |I| * w0`` for proper subsets and
    ``(m - 1) * w0`` for the whole circuit. Raises PreconditionError
    otherwise. Then checks, in order:

    a. each variable is determined by the others,
    b. each marginal is uniform on its support (exact),
    c. all supports have the same size ``k``,
    d. ``w0 = log2(k)``.
    """
    m = d.n
    if m < 2:
        raise PreconditionError("a circuit needs at least two variables")
    full = (1 << m) - 1
    for s in range(1, full + 1):
        target = (m - 1) * w0 if s == full else s.bit_count() * w0
        h = entropy(d, s)
        if abs(h - target) > tol:
            raise PreconditionError(
                f"entropy of {s:#x} is {h!r}, circuit profile requires {target!r}")
    for j in range(m):
        h = conditional_entropy(d, 1 << j, full & ~(1 << j))
        if h > tol:
            return UniformityReport(False, None, "determined", f"H(X{j + 1} | rest) = {h!r}")
    sizes = []
    for j in range(m):
        uniform, size = is_uniform_on_support(d, j)
        if not uniform:
            return UniformityReport(False, None, "uniform", f"X{j + 1} is not uniform on its support")
        sizes.append(size)
    if len(set(sizes)) != 1:
        return UniformityReport(False, None, "equal_support", f"support sizes {sizes}")
    k = sizes[0]
    if abs(w0 - math.log2(k)) > tol:
        return UniformityReport(False, k, "log_k", f"w0 = {w0!r} but log2({k}) = {math.log2(k)!r}")
    return UniformityReport(True, k)


def cyclic_sum_distribution(m: int, k: int) -> JointDistribution:
    """``X_1..X_{m-1}`` iid uniform on Z_k and ``X_m = -(X_1 + ... + X_{m-1}) mod k``.

    With ``m = 3, k = 2`` this is the XOR triple.
    """
    counts = {}
    for x in product(range(k), repeat=m - 1):
        counts[x + ((-sum(x)) % k,)] = 1
    return JointDistribution([(f"X{i + 1}", k) for i in range(m)], counts, k ** (m - 1))


def figure2_graphs() -> dict[str, tuple[GraphicMatroid, tuple[int, ...]]]:
    """The three weighted graphs: a weight-2 triangle and its two unit-weight
    rewrites (each edge subdivided; each edge doubled)."""
    return {
        "a": (GraphicMatroid(3, [(0, 1), (1, 2), (0, 2)]), (2, 2, 2)),
        "b": (GraphicMatroid(6, [(0, 3), (3, 1), (1, 4), (4, 2), (0, 5), (5, 2)]), (1,) * 6),
        "c": (GraphicMatroid(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]), (1,) * 6),
    }


def figure2(method: str = "both") -> dict[str, dict]:
    """Full-set entropy of the weighted triangle and both rewrites under the binary construction."""
    out = {}
    for name, (g, w) in figure2_graphs().items():
        c = build_binary(g, w)
        row: dict = {"edges": g.n, "vertices": g.vertices, "weights": list(w),
                     "phi": weighted_rank(g, w, g.full)}
        if method != "bruteforce":
            row["algebraic"] = algebraic_entropy_binary(c, g.full).rational_bits()
        if method != "algebraic":
            row["bruteforce"] = entropy(brute_force_distribution_binary(c), g.full)
        out[name] = row
    return out
