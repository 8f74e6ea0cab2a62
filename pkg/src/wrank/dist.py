"""Exact finite joint distributions and Shannon entropy in bits.

A :class:`JointDistribution` keeps its pmf as integer counts over a common
denominator, so every probability is an exact rational while marginals can
be formed with integer additions. Variable subsets are bitmasks over the
variable positions, matching the ground-set convention of the matroids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from operator import itemgetter
from typing import Iterable, Mapping, Sequence

from .matroid import elements
from .setfunc import SetFunctionVector

MAX_VECTOR_VARS = 12


class JointDistribution:
    """pmf over ``alphabet_0 x ... x alphabet_{n-1}`` with rational masses.

    ``counts[outcome] / total`` is the probability of ``outcome``. Outcomes
    with zero mass are not stored.
    """

    def __init__(self, variables: Sequence[tuple[str, int]], counts: Mapping[tuple, int], total: int | None = None):
        self.variables = tuple((str(name), int(size)) for name, size in variables)
        if any(size < 1 for _, size in self.variables):
            raise ValueError("alphabet sizes must be positive")
        clean = {}
        for outcome, c in counts.items():
            outcome = tuple(outcome)
            if len(outcome) != len(self.variables):
                raise ValueError(f"outcome {outcome} has wrong arity")
            for x, (name, size) in zip(outcome, self.variables):
                if not 0 <= x < size:
                    raise ValueError(f"symbol {x} out of range for {name}")
            if c < 0:
                raise ValueError("negative mass")
            if c:
                clean[outcome] = clean.get(outcome, 0) + c
        s = sum(clean.values())
        if total is None:
            total = s
        if total <= 0 or s != total:
            raise ValueError("probabilities must sum to exactly 1")
        g = reduce(math.gcd, clean.values(), total)
        self.counts = {o: c // g for o, c in clean.items()}
        self.total = total // g

    @classmethod
    def from_pmf(cls, variables: Sequence[tuple[str, int]], pmf: Mapping[tuple, object]) -> JointDistribution:
        probs = {tuple(o): Fraction(p) for o, p in pmf.items()}
        if sum(probs.values()) != 1:
            raise ValueError("probabilities must sum to exactly 1")
        denom = reduce(lambda a, b: a * b // math.gcd(a, b), (p.denominator for p in probs.values()), 1)
        return cls(variables, {o: int(p * denom) for o, p in probs.items()}, denom)

    @classmethod
    def product_of(cls, *marginals: Sequence) -> JointDistribution:
        """Independent variables with the given 1-D pmfs."""
        variables = [(f"X{i + 1}", len(p)) for i, p in enumerate(marginals)]
        pmf = {}
        for outcome in product(*(range(len(p)) for p in marginals)):
            mass = math.prod((Fraction(marginals[i][x]) for i, x in enumerate(outcome)), start=Fraction(1))
            if mass:
                pmf[outcome] = mass
        return cls.from_pmf(variables, pmf)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def pmf(self) -> dict[tuple, Fraction]:
        return {o: Fraction(c, self.total) for o, c in self.counts.items()}

    def _check(self, mask: int):
        if mask < 0 or mask >> self.n:
            raise ValueError(f"variable subset {mask:#x} outside {self.n} variables")

    def marginal_counts(self, mask: int) -> dict[tuple, int]:
        """Counts of the marginal on the variables in ``mask`` (same ``total``)."""
        self._check(mask)
        idx = elements(mask)
        if not idx:
            return {(): self.total}
        if len(idx) == 1:
            i = idx[0]
            get = lambda o: (o[i],)
        else:
            get = itemgetter(*idx)
        out: dict[tuple, int] = {}
        for o, c in self.counts.items():
            key = get(o)
            out[key] = out.get(key, 0) + c
        return out

    def marginal(self, mask: int) -> JointDistribution:
        idx = elements(mask)
        return JointDistribution([self.variables[i] for i in idx], self.marginal_counts(mask), self.total)

    def __repr__(self):
        return f"JointDistribution({[n for n, _ in self.variables]}, support={len(self.counts)})"


def _entropy_from_counts(counts: Iterable[int], total: int) -> float:
    # H = log2(T) - sum(c log2 c) / T
    acc = math.fsum(c * math.log2(c) for c in counts if c)
    h = math.log2(total) - acc / total
    return 0.0 if abs(h) < 1e-15 else h


def entropy(d: JointDistribution, variables: int) -> float:
    """Shannon entropy (bits) of the joint of the variables in the mask."""
    if variables == 0:
        raise ValueError("variable subset must be nonempty")
    return _entropy_from_counts(d.marginal_counts(variables).values(), d.total)


def conditional_entropy(d: JointDistribution, target: int, given: int) -> float:
    """``H(target | given) = H(target, given) - H(given)``."""
    if target & given:
        raise ValueError("target and given must be disjoint")
    joint = entropy(d, target | given)
    return joint - entropy(d, given) if given else joint


def entropy_vector(d: JointDistribution) -> SetFunctionVector:
    """Float entropies of every nonempty variable subset."""
    if d.n > MAX_VECTOR_VARS:
        raise ValueError(f"entropy vector limited to {MAX_VECTOR_VARS} variables")
    return SetFunctionVector(d.n, [entropy(d, s) for s in range(1, 1 << d.n)])


def is_uniform_on_support(d: JointDistribution, var: int) -> tuple[bool, int]:
    """Whether variable ``var`` (0-based) has a constant mass on its support.

    Returns ``(uniform, support_size)``; the comparison is exact.
    """
    if not 0 <= var < d.n:
        raise ValueError(f"no variable {var}")
    marg = d.marginal_counts(1 << var)
    return len(set(marg.values())) == 1, len(marg)


def factorizes(d: JointDistribution, variables: int) -> bool:
    """Exact test that the joint of ``variables`` equals the product of their marginals."""
    idx = elements(variables)
    joint = d.marginal_counts(variables)
    singles = [d.marginal_counts(1 << i) for i in idx]
    t = d.total
    # p(x) = prod p_i(x_i)  <=>  c(x) * t^(k-1) = prod c_i(x_i)
    scale = t ** (len(idx) - 1)
    for combo in product(*(m.items() for m in singles)):
        outcome = tuple(k[0] for k, _ in combo)
        rhs = math.prod(c for _, c in combo)
        if joint.get(outcome, 0) * scale != rhs:
            return False
    return True


def _smallest_root(k: int) -> tuple[int, int]:
    """``(b, e)`` with ``b ** e == k`` and ``b`` as small as possible."""
    for e in range(k.bit_length(), 1, -1):
        b = round(k ** (1 / e))
        for cand in (b - 1, b, b + 1):
            if cand >= 2 and cand ** e == k:
                return cand, e
    return k, 1


@dataclass(frozen=True, eq=False)
class EntropyValue:
    """The exact quantity ``coeff * log2(base)``.

    The base is kept as given, so a Z_k entropy reads ``r * log2(k)``.
    Equality and hashing go through :meth:`canonical`, where ``base`` is not
    a perfect power (4 becomes 2 with the exponent moved into ``coeff``) and
    zero is ``0 * log2(2)``.
    """

    coeff: Fraction
    base: int = 2

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        object.__setattr__(self, "coeff", Fraction(self.coeff))

    def canonical(self) -> EntropyValue:
        if self.coeff == 0:
            return EntropyValue(Fraction(0), 2)
        b, e = _smallest_root(self.base)
        return EntropyValue(self.coeff * e, b)

    def __float__(self):
        return float(self.coeff) * math.log2(self.base)

    def __eq__(self, other):
        if isinstance(other, EntropyValue):
            a, b = self.canonical(), other.canonical()
            return a.coeff == b.coeff and a.base == b.base
        return NotImplemented

    def __hash__(self):
        c = self.canonical()
        return hash((c.coeff, c.base))

    def rational_bits(self) -> Fraction | None:
        """The value as a rational number of bits, when it is one."""
        c = self.canonical()
        return c.coeff if c.base == 2 else None

    def __str__(self):
        bits = self.rational_bits()
        if bits is not None:
            return str(bits)
        return f"{self.coeff}*log2({self.base})"
