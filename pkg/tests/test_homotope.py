"""Unit tests for the deformed products, LTS axiom checks and the standard
imbedding."""

import random
from fractions import Fraction

import pytest

from homotopes.families import (asym_space, matrix_space, rand_invertible,
                                rand_matrix, sample_in_subspace, sym_space)
from homotopes.homotope import (AlphaMap, AlphaTriple, GenericTriple,
                                TripleSystem, bracket_param, cdual, check_closure,
                                check_lts, gamma_intertwines, hom_sxt,
                                hom_sxt_check, standard_imbedding, triple_param)
from homotopes.involutions import MatrixInvolution, joint_eigenspaces
from homotopes.matrices import Matrix
from homotopes.scalars import Q, QI, Scalar


class TestProducts:
    def setup_method(self):
        self.rng = random.Random(5)

    def test_bracket_definition(self):
        x, y = (rand_matrix(2, 3, Q, self.rng) for _ in range(2))
        a = rand_matrix(3, 2, Q, self.rng)
        assert bracket_param(x, y, a) == x @ a @ y - y @ a @ x

    def test_bracket_antisymmetric(self):
        x, y = (rand_matrix(2, 2, QI, self.rng) for _ in range(2))
        a = rand_matrix(2, 2, QI, self.rng)
        assert bracket_param(x, y, a) == -bracket_param(y, x, a)

    def test_triple_definition(self):
        x, y, z = (rand_matrix(2, 3, Q, self.rng) for _ in range(3))
        a = rand_matrix(3, 2, Q, self.rng)
        w = (x @ (a @ y @ a) @ z + z @ (a @ y @ a) @ x
             - y @ (a @ x @ a) @ z - z @ (a @ x @ a) @ y)
        assert triple_param(x, y, z, a) == w

    def test_scaling_law(self):
        x, y, z = (rand_matrix(2, 2, Q, self.rng) for _ in range(3))
        a = rand_matrix(2, 2, Q, self.rng)
        for r in (Fraction(-1), Fraction(2), Fraction(1, 3)):
            assert (triple_param(x, y, z, a.scale(r))
                    == triple_param(x, y, z, a).scale(r * r))

    def test_cdual_negates(self):
        sp = matrix_space(2, 2, Q)
        a = rand_matrix(2, 2, Q, self.rng)
        sysm = TripleSystem.from_parameter(sp, a)
        cd = cdual(sysm)
        b = sp.basis_matrices()
        assert all(cd.eval(x, y, z) == -sysm.eval(x, y, z)
                   for x in b[:2] for y in b[:2] for z in b[:2])


class TestCheckLts:
    def setup_method(self):
        self.rng = random.Random(6)

    def test_passes_on_homotope(self):
        sp = matrix_space(2, 2, Q)
        a = rand_matrix(2, 2, Q, self.rng)
        assert check_lts(TripleSystem.from_parameter(sp, a)).ok

    def test_passes_with_zero_parameter(self):
        sp = matrix_space(2, 3, Q)
        assert check_lts(TripleSystem.from_parameter(sp, Matrix.zeros(3, 2, Q))).ok

    def test_fails_on_non_lts(self):
        """A product violating LT2 must be rejected with a witness."""
        sp = matrix_space(2, 2, Q)

        def bad(x, y, z):
            return (x @ y - y @ x) @ z

        report = check_lts(TripleSystem(sp, GenericTriple(bad)))
        assert not report.ok
        assert any(e["axiom"] in ("LT2", "LT3") for e in report.failing())

    def test_fails_on_asymmetric_product(self):
        sp = matrix_space(2, 2, Q)
        a = rand_matrix(2, 2, Q, self.rng)

        def bad(x, y, z):
            return x @ a @ y @ a @ z

        report = check_lts(TripleSystem(sp, GenericTriple(bad)))
        assert not report.ok
        assert any(e["axiom"] == "LT1" for e in report.failing())

    def test_closure_fails_off_carrier(self):
        """Sym(2) with a generic non-symmetric parameter is not closed."""
        sp = sym_space(2, Q)
        a = Matrix.from_rows(Q, [[0, 1], [0, 0]])
        assert not check_closure(sp, lambda x, y, z: triple_param(x, y, z, a))

    def test_kernel_and_exact_structure_agree(self):
        sp = sym_space(2, Q)
        a = sample_in_subspace(sp, self.rng)
        s1 = TripleSystem.from_parameter(sp, a)
        s2 = TripleSystem.from_parameter(sp, a)
        k = s1._structure_kernel()
        e = s2._structure_exact()
        import numpy as np
        assert k.closed == e.closed
        assert np.array_equal(k.coords.a * e.coords.den, e.coords.a * k.coords.den)


class TestHomomorphisms:
    def setup_method(self):
        self.rng = random.Random(7)

    def test_sxt_intertwines(self):
        for _ in range(5):
            s, t, a, x, y = (rand_matrix(2, 2, QI, self.rng) for _ in range(5))
            assert hom_sxt_check(s, t, a, x, y)

    def test_sxt_rectangular(self):
        s = rand_matrix(2, 2, Q, self.rng)
        t = rand_matrix(3, 3, Q, self.rng)
        a = rand_matrix(3, 2, Q, self.rng)
        x, y = (rand_matrix(2, 3, Q, self.rng) for _ in range(2))
        assert hom_sxt_check(s, t, a, x, y)

    def test_gamma_action(self):
        tau = MatrixInvolution.transpose_inv(2, Q)
        dec = joint_eigenspaces([tau])
        a = sample_in_subspace(dec.piece((1,)), self.rng)
        g = rand_invertible(2, Q, self.rng)
        assert gamma_intertwines(g, a, tau, matrix_space(2, 2, Q))


class TestStandardImbedding:
    def test_ok_for_homotope(self):
        rng = random.Random(8)
        sp = sym_space(2, Q)
        a = sample_in_subspace(sp, rng)
        emb = standard_imbedding(TripleSystem.from_parameter(sp, a))
        assert emb.ok
        assert emb.m_dim == 3

    def test_rejects_unclosed(self):
        sp = sym_space(2, Q)
        a = Matrix.from_rows(Q, [[0, 1], [0, 0]])
        with pytest.raises(ValueError):
            standard_imbedding(TripleSystem.from_parameter(sp, a))
