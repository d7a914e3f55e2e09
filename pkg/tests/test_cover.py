import pytest
from hypothesis import given, strategies as st

from tropalg import MAXPLUS, MINPLUS, ZERO, CoverElement, cover_add, cover_mul, is_ghost_or_zero
from tropalg.cover import cover_mat_vec, lift
from tropalg.errors import DomainMismatchError
from tropalg.matrix import mat_vec

from strategies import matrices, small_entries

T = CoverElement.tangible
G = CoverElement.hat
sf = MAXPLUS

elements = st.builds(CoverElement, st.just(sf), small_entries, st.booleans())


class TestRules:
    def test_equal_tangibles_make_a_ghost(self):
        assert cover_add(T(sf, 3), T(sf, 3)) == G(sf, 3)

    def test_tangible_beats_smaller_ghost(self):
        assert cover_add(T(sf, 5), G(sf, 3)) == T(sf, 5)
        assert cover_add(G(sf, 3), T(sf, 5)) == T(sf, 5)

    def test_ghost_absorbs_equal_or_smaller_tangible(self):
        assert cover_add(T(sf, 3), G(sf, 3)) == G(sf, 3)
        assert cover_add(T(sf, 2), G(sf, 3)) == G(sf, 3)

    def test_zero_stays_tangible(self):
        z = T(sf, ZERO)
        assert cover_add(z, z) == z and not cover_add(z, z).ghost
        assert G(sf, ZERO) == z

    def test_products(self):
        assert cover_mul(T(sf, 2), G(sf, 3)) == G(sf, 5)
        assert cover_mul(T(sf, 2), T(sf, 3)) == T(sf, 5)
        assert cover_mul(G(sf, 2), T(sf, ZERO)) == T(sf, ZERO)

    def test_ghost_or_zero(self):
        assert is_ghost_or_zero([G(sf, 3), G(sf, 0)])
        assert not is_ghost_or_zero([G(sf, 3), T(sf, 2)])
        assert is_ghost_or_zero([T(sf, ZERO), G(sf, 1)])

    def test_mixed_instances(self):
        with pytest.raises(DomainMismatchError):
            cover_add(T(sf, 1), T(MINPLUS, 1))

    def test_json(self):
        assert G(sf, 3).to_json() == {"ghost": "3"}
        assert T(sf, ZERO).to_json() == "-inf"


class TestLaws:
    @given(small_entries, small_entries)
    def test_hat_is_an_isomorphism(self, a, b):
        assert cover_add(G(sf, a), G(sf, b)) == G(sf, sf.add(a, b))
        assert cover_mul(G(sf, a), G(sf, b)) == G(sf, sf.mul(a, b))

    @given(elements, elements, elements)
    def test_semiring_laws(self, a, b, c):
        assert cover_add(a, b) == cover_add(b, a)
        assert cover_add(cover_add(a, b), c) == cover_add(a, cover_add(b, c))
        assert cover_mul(cover_mul(a, b), c) == cover_mul(a, cover_mul(b, c))
        assert cover_mul(a, cover_add(b, c)) == cover_add(cover_mul(a, b), cover_mul(a, c))

    @given(elements)
    def test_ghosts_idempotent(self, a):
        s = cover_add(a, a)
        assert s.magnitude == a.magnitude
        assert s.ghost == (not s.is_zero)

    @given(matrices(max_dim=4), st.data())
    def test_lift_magnitudes(self, a, data):
        x = tuple(data.draw(small_entries) for _ in range(a.cols))
        assert [c.magnitude for c in cover_mat_vec(a, x)] == list(mat_vec(a, x))
        assert all(not c.ghost for c in lift(sf, x))
