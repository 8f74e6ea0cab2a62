import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import marginal, shannon
from wrank.construct import build_binary, brute_force_distribution_binary, build_graphic_zk, brute_force_distribution_zk
from wrank.dist import (EntropyValue, JointDistribution, conditional_entropy, entropy, entropy_vector,
                        factorizes, is_uniform_on_support)
from wrank.matroid import elements, triangle
from wrank.setfunc import check_submodular

H = Fraction(1, 2)


def single(pmf):
    return JointDistribution.from_pmf([("X", len(pmf))], {(i,): p for i, p in enumerate(pmf)})


@st.composite
def joint_pmfs(draw, max_vars=3, max_size=3):
    n = draw(st.integers(1, max_vars))
    sizes = [draw(st.integers(1, max_size)) for _ in range(n)]
    outcomes = draw(st.lists(st.tuples(*(st.integers(0, s - 1) for s in sizes)), min_size=1, max_size=12))
    weights = draw(st.lists(st.integers(1, 9), min_size=len(outcomes), max_size=len(outcomes)))
    counts: dict = {}
    for o, c in zip(outcomes, weights):
        counts[o] = counts.get(o, 0) + c
    return JointDistribution([(f"V{i}", s) for i, s in enumerate(sizes)], counts)


class TestConstruction:
    def test_must_sum_to_one(self):
        with pytest.raises(ValueError):
            JointDistribution.from_pmf([("X", 2)], {(0,): H, (1,): Fraction(1, 3)})

    def test_symbol_range(self):
        with pytest.raises(ValueError):
            JointDistribution([("X", 2)], {(2,): 1})

    def test_arity(self):
        with pytest.raises(ValueError):
            JointDistribution([("X", 2), ("Y", 2)], {(0,): 1})

    def test_exact_pmf(self):
        d = single([Fraction(1, 3), Fraction(2, 3)])
        assert d.pmf == {(0,): Fraction(1, 3), (1,): Fraction(2, 3)}


class TestEntropy:
    def test_fair_coin(self):
        assert entropy(single([H, H]), 1) == 1.0

    def test_point_mass(self):
        assert entropy(single([1]), 1) == 0.0

    def test_uniform_three(self):
        assert abs(entropy(single([Fraction(1, 3)] * 3), 1) - 1.584962500721156) <= 1e-12

    def test_empty_subset_rejected(self):
        with pytest.raises(ValueError):
            entropy(single([1]), 0)

    @settings(max_examples=100)
    @given(joint_pmfs())
    def test_matches_definition(self, d):
        pmf = d.pmf
        for s in range(1, 1 << d.n):
            expected = shannon(marginal(pmf, elements(s)).values())
            assert abs(entropy(d, s) - expected) <= 1e-9

    @settings(max_examples=100)
    @given(joint_pmfs(), st.randoms())
    def test_permutation_invariant(self, d, rnd):
        perm = list(range(d.n))
        rnd.shuffle(perm)
        permuted = JointDistribution([d.variables[p] for p in perm],
                                     {tuple(o[p] for p in perm): c for o, c in d.counts.items()}, d.total)
        assert abs(entropy(d, (1 << d.n) - 1) - entropy(permuted, (1 << d.n) - 1)) <= 1e-9

    @settings(max_examples=100)
    @given(joint_pmfs())
    def test_monotone_and_submodular(self, d):
        v = entropy_vector(d)
        full = (1 << d.n) - 1
        for s in range(1, full + 1):
            for e in elements(full & ~s):
                assert v[s | (1 << e)] >= v[s] - 1e-9
        assert check_submodular(v, tol=1e-9)[0]

    @settings(max_examples=60)
    @given(st.lists(st.lists(st.integers(1, 5), min_size=1, max_size=3), min_size=1, max_size=3))
    def test_independent_sum(self, raw):
        margs = [[Fraction(x, sum(r)) for x in r] for r in raw]
        d = JointDistribution.product_of(*margs)
        total = sum(shannon(m) for m in margs)
        assert abs(entropy(d, (1 << d.n) - 1) - total) <= 1e-9
        assert factorizes(d, (1 << d.n) - 1)

    @pytest.mark.parametrize("size", [1, 2, 3, 5, 7, 16])
    def test_uniform_closed_form(self, size):
        assert abs(entropy(single([Fraction(1, size)] * size), 1) - math.log2(size)) <= 1e-12


class TestConditional:
    def test_self(self):
        d = JointDistribution([("X", 2), ("X'", 2)], {(0, 0): 1, (1, 1): 1})
        assert conditional_entropy(d, 0b01, 0b10) == 0.0

    def test_independent(self):
        d = JointDistribution.product_of([H, H], [H, H])
        assert conditional_entropy(d, 0b01, 0b10) == 1.0

    def test_triangle_edge_determined(self):
        d = brute_force_distribution_binary(build_binary(triangle(), (1, 1, 1)))
        for e in range(3):
            assert abs(conditional_entropy(d, 1 << e, 0b111 & ~(1 << e))) <= 1e-12

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            conditional_entropy(JointDistribution.product_of([H, H]), 1, 1)


class TestEntropyVector:
    def test_independent_bits(self):
        assert entropy_vector(JointDistribution.product_of([H, H], [H, H])).values == (1.0, 1.0, 2.0)

    def test_duplicated_bit(self):
        d = JointDistribution([("X", 2), ("X", 2)], {(0, 0): 1, (1, 1): 1})
        assert entropy_vector(d).values == (1.0, 1.0, 1.0)

    def test_weight_two_triangle(self):
        d = brute_force_distribution_binary(build_binary(triangle(), (2, 2, 2)))
        assert abs(entropy_vector(d)[0b111] - 4.0) <= 1e-9


class TestUniformSupport:
    def test_uniform_four(self):
        assert is_uniform_on_support(single([Fraction(1, 4)] * 4), 0) == (True, 4)

    def test_skewed(self):
        assert is_uniform_on_support(single([H, Fraction(1, 4), Fraction(1, 4)]), 0) == (False, 3)

    def test_zk_marginals(self):
        d = brute_force_distribution_zk(build_graphic_zk(triangle(), 3))
        assert all(is_uniform_on_support(d, e) == (True, 3) for e in range(3))


class TestEntropyValue:
    def test_canonical_power(self):
        v = EntropyValue(2, 4)
        assert v.base == 4 and v.coeff == 2
        assert v.canonical() == EntropyValue(4, 2) and v == EntropyValue(4, 2)
        assert v.rational_bits() == 4 and str(v) == "4"

    def test_irrational(self):
        v = EntropyValue(2, 3)
        assert v.rational_bits() is None
        assert str(v) == "2*log2(3)"
        assert abs(float(v) - 2 * math.log2(3)) <= 1e-12

    def test_zero(self):
        assert EntropyValue(0, 5) == EntropyValue(0, 2)
        assert hash(EntropyValue(0, 5)) == hash(EntropyValue(0))

    def test_non_power_differs(self):
        assert EntropyValue(1, 6) != EntropyValue(1, 2)
        assert EntropyValue(Fraction(3, 2), 9) == EntropyValue(3, 3)

    def test_bad_base(self):
        with pytest.raises(ValueError):
            EntropyValue(1, 1)

    @given(st.integers(2, 200), st.fractions(min_value=0, max_value=10, max_denominator=6))
    def test_canonical_preserves_value(self, k, q):
        v = EntropyValue(q, k)
        c = v.canonical()
        assert abs(float(v) - float(c)) <= 1e-9 * max(1.0, float(v))
        assert c.canonical() == c and hash(c) == hash(v)
