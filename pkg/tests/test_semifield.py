from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropalg import (
    BOOLEAN, MAXPLUS, MINPLUS, ZERO, DomainMismatchError, NoInverseError, Value,
    frobenius_check, get_semifield, natural_leq, ordered_group_semifield, quasi_opposite,
    sf_add, sf_inv, sf_mul,
)
from tropalg.errors import ConstructionError
from tropalg.semifield import is_orthogonal

from strategies import maxplus_values


def mp(x):
    return Value(MAXPLUS, x)


def lex():
    samples = [(a, b) for a in (-1, 0, 2) for b in (-2, 0, 5)]
    return ordered_group_semifield("lex", lambda x, y: (x[0] + y[0], x[1] + y[1]), (0, 0),
                                   lambda x: (-x[0], -x[1]), samples)


class TestArithmetic:
    def test_maxplus_add_is_max(self):
        assert sf_add(mp(3), mp(5)) == mp(5)

    def test_maxplus_mul_and_inverse(self):
        assert sf_mul(mp(3), mp(5)) == mp(8)
        assert sf_inv(mp(3)) == mp(-3)

    def test_f1_one_plus_one(self):
        one = Value(BOOLEAN, 1)
        assert one + one == one

    def test_minplus_is_min(self):
        assert Value(MINPLUS, 3) + Value(MINPLUS, 5) == Value(MINPLUS, 3)
        assert Value(MINPLUS, 3) * Value(MINPLUS, 5) == Value(MINPLUS, 8)
        assert MINPLUS.format(ZERO) == "+inf"

    def test_mixed_instances_rejected(self):
        with pytest.raises(DomainMismatchError):
            sf_add(mp(1), Value(MINPLUS, 1))
        with pytest.raises(DomainMismatchError):
            mp(1) * Value(BOOLEAN, 1)

    def test_zero_has_no_inverse(self):
        with pytest.raises(NoInverseError):
            sf_inv(mp(ZERO))
        with pytest.raises(NoInverseError):
            sf_inv(Value(BOOLEAN, 0))

    def test_rationals_are_exact(self):
        a = MAXPLUS.coerce("1/3")
        assert MAXPLUS.mul(a, MAXPLUS.coerce("2/3")) == 1
        assert isinstance(MAXPLUS.mul(a, a), Fraction)
        with pytest.raises(ValueError):
            MAXPLUS.coerce("0.5")

    def test_coerce_and_format_zero(self):
        assert MAXPLUS.coerce("-inf") is ZERO
        assert MINPLUS.coerce("+inf") is ZERO
        assert MAXPLUS.format(ZERO) == "-inf"
        assert get_semifield("f1") is BOOLEAN
        with pytest.raises(ValueError):
            get_semifield("plus-times")


class TestQuasiOpposite:
    @pytest.mark.parametrize("v", [mp(5), mp(ZERO), Value(BOOLEAN, 1)])
    def test_is_identity(self, v):
        assert quasi_opposite(v) == v

    @given(maxplus_values, st.lists(maxplus_values, min_size=1, max_size=50))
    def test_unique(self, x, ys):
        x = mp(x)
        for y in map(mp, ys):
            if y == x:
                continue
            assert not (x + y + x == x and y + x + y == y)


class TestOrder:
    def test_examples(self):
        assert natural_leq(mp(3), mp(5))
        assert natural_leq(mp(ZERO), mp(-100))
        assert not natural_leq(Value(BOOLEAN, 1), Value(BOOLEAN, 0))

    @given(maxplus_values, maxplus_values, maxplus_values)
    def test_total_order(self, a, b, c):
        for sf in (MAXPLUS, MINPLUS):
            x, y, z = Value(sf, a), Value(sf, b), Value(sf, c)
            assert x <= y or y <= x
            if x <= y and y <= x:
                assert x == y
            if x <= y and y <= z:
                assert x <= z


class TestFrobenius:
    def test_examples(self):
        assert frobenius_check(mp(1), mp(2), 3)
        assert ((mp(1) + mp(2)) ** 3) == mp(6)
        assert frobenius_check(mp(4), mp(4), 7)
        assert frobenius_check(Value(BOOLEAN, 1), Value(BOOLEAN, 1), 5)

    @given(maxplus_values, maxplus_values, st.integers(1, 8))
    def test_holds(self, a, b, n):
        assert frobenius_check(mp(a), mp(b), n)
        assert frobenius_check(Value(MINPLUS, a), Value(MINPLUS, b), n)


class TestOrderedGroup:
    def test_integers_reproduce_maxplus(self):
        z = ordered_group_semifield("Z", lambda a, b: a + b, 0, lambda a: -a, range(-3, 4))
        for a in range(-3, 4):
            for b in range(-3, 4):
                assert z.add(a, b) == MAXPLUS.add(a, b)
                assert z.mul(a, b) == MAXPLUS.mul(a, b)

    def test_lexicographic(self):
        sf = lex()
        assert sf.add((1, 0), (0, 5)) == (1, 0)
        assert sf.mul((1, 0), (0, 5)) == (1, 5)
        assert sf.add(ZERO, (0, 5)) == (0, 5)

    def test_rejects_incompatible_order(self):
        # a * a sends a and -a to the same key, so the order is not antisymmetric
        with pytest.raises(ConstructionError):
            ordered_group_semifield("bad", lambda a, b: a + b, 0, lambda a: -a,
                                    range(-3, 4), key=lambda a: a * a)


class TestOrthogonality:
    def test_examples(self):
        assert is_orthogonal((3, ZERO), (ZERO, 5), MAXPLUS)
        assert not is_orthogonal((3, 1), (ZERO, 5), MAXPLUS)
        assert is_orthogonal((ZERO, ZERO), (1, 2), MAXPLUS)
        assert is_orthogonal([mp(3), mp(ZERO)], [mp(ZERO), mp(5)])
