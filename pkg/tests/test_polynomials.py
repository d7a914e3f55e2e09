import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropalg import BOOLEAN, MAXPLUS, MINPLUS, ZERO, UnivariatePoly, eval_cover, is_root, roots
from tropalg.errors import DomainMismatchError, UndefinedRootsError, UnsupportedSemifieldError
from tropalg.oracles import oracle_roots
from tropalg.polynomials import X, constant, poly_pow, total_multiplicity
from tropalg.checks import random_poly


def P(sf=MAXPLUS, **c):
    return UnivariatePoly(sf, {int(k[1:]): v for k, v in c.items()})


def split_root(p, r):
    """Definition by orthogonal splits of the monomials: some P1(r) == P2(r)."""
    sf = p.sf
    terms = [sf.mul(a, sf.power(r, d)) for d, a in p.coeffs.items()]
    for mask in range(1 << len(terms)):
        left = sf.sum(t for i, t in enumerate(terms) if mask >> i & 1)
        right = sf.sum(t for i, t in enumerate(terms) if not mask >> i & 1)
        if left == right:
            return True
    return False


polys = st.dictionaries(st.integers(0, 6), st.integers(-6, 6), min_size=1, max_size=7).map(
    lambda c: UnivariatePoly(MAXPLUS, c))


class TestAlgebra:
    def test_non_cancellation(self):
        one = X() + constant(MAXPLUS, 0)
        q1 = X() ** 2 + constant(MAXPLUS, 0)
        q2 = X() ** 2 + X() + constant(MAXPLUS, 0)
        assert one * q1 == one * q2 and q1 != q2

    def test_zero_coefficients_dropped(self):
        p = UnivariatePoly(MAXPLUS, {3: ZERO, 1: 2})
        assert p.degree == 1 and p.coeffs == {1: 2}
        assert UnivariatePoly(MAXPLUS, {}).degree == -1

    def test_mixed_instances(self):
        with pytest.raises(DomainMismatchError):
            X(MAXPLUS) + X(MINPLUS)

    @given(polys, polys, st.integers(1, 4), st.integers(-10, 10))
    def test_frobenius_as_functions(self, p, q, n, x):
        assert poly_pow(p + q, n)(x) == (poly_pow(p, n) + poly_pow(q, n))(x)

    def test_frobenius_fails_formally(self):
        # K[X] does not cancel, so the identity only holds for the functions
        p, q = constant(MAXPLUS, 0), X() + constant(MAXPLUS, -1)
        lhs, rhs = poly_pow(p + q, 2), poly_pow(p, 2) + poly_pow(q, 2)
        assert lhs.coeffs == {0: 0, 1: 0, 2: 0}
        assert rhs.coeffs == {0: 0, 1: -1, 2: 0}

    @given(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 5), st.integers(1, 4))
    def test_frobenius_formal_for_equal_degree_monomials(self, a, b, d, n):
        p, q = UnivariatePoly(MAXPLUS, {d: a}), UnivariatePoly(MAXPLUS, {d: b})
        assert poly_pow(p + q, n) == poly_pow(p, n) + poly_pow(q, n)

    def test_evaluation(self):
        p = P(e2=0, e1=3, e0=4)
        assert p(0) == 4 and p(5) == 10 and p(ZERO) == 4


class TestRoots:
    def test_examples(self):
        assert roots(P(e2=0, e1=3, e0=4)) == [(3, 1), (1, 1)]
        assert roots(P(e2=0, e0=4)) == [(2, 2)]
        assert roots(X()) == [(ZERO, 1)]
        assert roots(P(e3=1, e1=0)) == [(Fraction(-1, 2), 2), (ZERO, 1)]
        assert roots(constant(MAXPLUS, 5)) == []

    def test_minplus(self):
        p = P(MINPLUS, e2=0, e1=3, e0=4)
        rs = roots(p)
        assert all(is_root(p, r) for r, _ in rs)
        assert total_multiplicity(rs) == 2

    def test_errors(self):
        with pytest.raises(UndefinedRootsError):
            roots(UnivariatePoly(MAXPLUS, {}))
        with pytest.raises(UnsupportedSemifieldError):
            roots(UnivariatePoly(BOOLEAN, {1: 1, 0: 1}))

    def test_is_root(self):
        p = P(e2=0, e1=3, e0=4)
        assert is_root(p, 3) and is_root(p, 1) and not is_root(p, 2)
        assert is_root(X(), ZERO) and not is_root(p, ZERO)

    def test_eval_cover(self):
        p = X() + constant(MAXPLUS, 3)
        c = eval_cover(p, 3)
        assert c.ghost and c.magnitude == 3
        c = eval_cover(p, 5)
        assert not c.ghost and c.magnitude == 5
        c = eval_cover(X(), ZERO)
        assert not c.ghost and c.magnitude is ZERO

    @given(polys, st.one_of(st.just(ZERO), st.integers(-12, 12),
                            st.builds(Fraction, st.integers(-40, 40), st.integers(1, 4))))
    def test_is_root_matches_split_definition(self, p, r):
        assert is_root(p, r) == split_root(p, r)
        c = eval_cover(p, r)
        assert (c.ghost or c.is_zero) == is_root(p, r)

    @given(st.integers(0, 10**6))
    def test_grid_agreement(self, seed):
        p = random_poly(random.Random(seed))
        rs = roots(p)
        assert total_multiplicity(rs) == p.degree
        finite = {r for r, _ in rs if r is not ZERO}
        grid = set(oracle_roots(p, -30, 30, Fraction(1, 4)))
        assert grid == {r for r in finite if (4 * Fraction(r)).denominator == 1}
        assert all(is_root(p, r) for r, _ in rs)
