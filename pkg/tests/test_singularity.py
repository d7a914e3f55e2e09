import pytest
from hypothesis import given

from tropalg import (
    BOOLEAN, MAXPLUS, ZERO, Matrix, classify, is_D_singular, is_d_singular,
    is_definitionally_singular, is_gm_dependent, singular_witness,
)
from tropalg.errors import NotSingularError, SearchExhaustedError
from tropalg.matrix import mat_vec
from tropalg.oracles import SearchBudget, oracle_definitional_singular, oracle_gm_dependent
from tropalg.singularity import (
    find_gm_witness, has_regular_row_minor, transpose_agrees, verify_gm_witness, verify_witness,
)

from strategies import matrices, square_matrices

G3 = Matrix(MAXPLUS, [[0, 0, ZERO], [ZERO, 0, 0], [0, ZERO, 0]])
Z2 = Matrix(MAXPLUS, [[0, 0], [0, 0]])
I2 = Matrix.identity(MAXPLUS, 2)


class TestCriteria:
    def test_d_singular(self):
        assert not is_d_singular(I2)
        assert is_d_singular(Z2)
        assert is_d_singular(G3)

    def test_D_singular(self):
        assert is_D_singular(Z2)
        assert not is_D_singular(G3)
        assert not is_D_singular(I2)

    def test_definitional_shapes(self):
        tall = Matrix(MAXPLUS, [[0, ZERO], [ZERO, 0], [5, 5]])
        assert not is_definitionally_singular(tall)
        assert has_regular_row_minor(tall) == (0, 1)
        assert is_definitionally_singular(Matrix(MAXPLUS, [[1, 2, 3], [4, 5, 6]]))
        assert is_definitionally_singular(Z2)

    def test_gm(self):
        assert is_gm_dependent(Z2)
        assert not is_gm_dependent(G3)
        assert not is_gm_dependent(I2)
        w = find_gm_witness(Z2)
        assert (w.x1, w.x2) == ((0, ZERO), (ZERO, 0))


class TestWitness:
    def test_all_units(self):
        w = singular_witness(Z2)
        assert w.x == (0, 0)
        assert w.a1 == Matrix(MAXPLUS, [[0, ZERO], [0, ZERO]])
        assert w.a2 == Matrix(MAXPLUS, [[ZERO, 0], [ZERO, 0]])

    def test_g3(self):
        w = singular_witness(G3)
        assert w.x == (0, 0, 0)
        verify_witness(G3, w)

    def test_regular_has_none(self):
        with pytest.raises(NotSingularError):
            singular_witness(I2)

    def test_zero_row(self):
        a = Matrix(MAXPLUS, [[ZERO, ZERO], [1, 2]])
        verify_witness(a, singular_witness(a))

    def test_small_budget_reports_exhaustion(self, monkeypatch):
        import tropalg.singularity as mod
        monkeypatch.setattr(mod, "cramer_candidates", lambda a: iter(()))
        verify_witness(Z2, singular_witness(Z2))  # the grid alone finds it
        with pytest.raises(SearchExhaustedError):
            singular_witness(Z2, SearchBudget(max_dim=1))
        assert classify(Z2, SearchBudget(max_dim=1)).witness_status == "exhausted"


class TestClassify:
    def test_identity(self):
        r = classify(Matrix.identity(MAXPLUS, 3))
        assert r.verdicts() == (False, False, False, False)

    def test_all_units(self):
        r = classify(Z2)
        assert r.verdicts() == (True, True, True, True)
        assert r.witness is not None and r.gm_witness is not None

    def test_g3(self):
        r = classify(G3)
        assert r.verdicts() == (True, False, True, False)
        assert r.det.det_plus == 0 and r.det.det_minus is ZERO

    def test_rectangular(self):
        wide = classify(Matrix(MAXPLUS, [[1, 2, 3], [4, 5, 6]]))
        assert wide.gm_method == "dimension" and wide.gm_dependent and wide.definitional_singular
        tall = classify(Matrix(MAXPLUS, [[0, ZERO], [ZERO, 0], [5, 5]]))
        assert not tall.definitional_singular and not tall.gm_dependent
        assert tall.gm_witness_status == "exhausted"

    @given(square_matrices())
    def test_against_oracles(self, a):
        r = classify(a)
        assert r.definitional_singular == (oracle_definitional_singular(a) is not None)
        assert r.gm_dependent == (oracle_gm_dependent(a) is not None)
        if r.definitional_singular:
            verify_witness(a, r.witness)
        if r.gm_dependent:
            verify_gm_witness(a, r.gm_witness)

    @given(matrices(max_dim=3))
    def test_rectangular_against_oracles(self, a):
        r = classify(a)
        if a.rows >= a.cols:
            assert r.definitional_singular == (oracle_definitional_singular(a) is not None)
            assert r.gm_dependent == (oracle_gm_dependent(a) is not None)

    @given(square_matrices())
    def test_implications(self, a):
        r = classify(a, witnesses=False)
        assert not r.D_singular or r.d_singular
        assert not r.gm_dependent or r.definitional_singular

    @given(matrices(max_dim=3))
    def test_transpose(self, a):
        if a.is_square:
            assert transpose_agrees(a)

    def test_f1_exhaustive_two_by_two(self):
        from itertools import product
        for bits in product((0, 1), repeat=4):
            a = Matrix(BOOLEAN, [bits[:2], bits[2:]])
            r = classify(a)
            assert r.definitional_singular == (oracle_definitional_singular(a) is not None)
            assert r.gm_dependent == (oracle_gm_dependent(a) is not None)
            if r.witness:
                assert mat_vec(r.witness.a1, r.witness.x) == mat_vec(r.witness.a2, r.witness.x)
