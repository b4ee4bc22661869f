"""Unit tests for the deformed group law, unitary/symplectic analogues and the
tangent/linearization checks."""

import random

import pytest

from homotopes.families import aherm_space, rand_matrix, sample_in_subspace
from homotopes.groups import (GroupElement, cayley_element, g_identity, g_inv,
                              g_mul, group_axiom_suite, hom_check,
                              is_quasi_invertible, membership,
                              rand_symmetric_invertible, star_from_delta,
                              tangent_check, tangent_suite, u_defect,
                              u_linearization_check, unitary_suite)
from homotopes.matrices import Matrix
from homotopes.scalars import HQ, Q, QI


class TestGroupLaw:
    def setup_method(self):
        self.rng = random.Random(12)

    def test_flat_case_is_addition(self):
        x, y = (rand_matrix(2, 2, Q, self.rng) for _ in range(2))
        a = Matrix.zeros(2, 2, Q)
        assert g_mul(x, y, a) == x + y
        assert g_inv(x, a) == -x

    def test_axiom_suites(self):
        for p, q, ring in [(2, 2, Q), (1, 2, QI), (2, 1, HQ)]:
            assert group_axiom_suite(p, q, ring, 6, 0)["pass"]

    def test_quasi_inverse_needs_invertibility(self):
        a = Matrix.identity(2, Q)
        x = Matrix.identity(2, Q)  # 1 - XA = 0 is singular
        assert not is_quasi_invertible(x, a)
        with pytest.raises(ZeroDivisionError):
            g_inv(x, a)

    def test_group_element_wrapper(self):
        a = rand_matrix(2, 2, Q, self.rng)
        x = rand_matrix(2, 2, Q, self.rng)
        while not is_quasi_invertible(x, a):
            x = rand_matrix(2, 2, Q, self.rng)
        g = GroupElement(x, a)
        e = GroupElement(g_identity(2, 2, Q), a)
        assert g * g.inv() == e

    def test_one_minus_ax_homomorphism(self):
        for _ in range(5):
            a = rand_matrix(2, 2, QI, self.rng)
            x, y = (rand_matrix(2, 2, QI, self.rng) for _ in range(2))
            assert hom_check(x, y, a)


class TestUnitary:
    def test_suites(self):
        for n, ring, delta in [(2, Q, "id"), (2, QI, "conj"),
                               (2, HQ, "qconj"), (2, HQ, "qsplit")]:
            assert unitary_suite(n, ring, delta, 5, 0)["pass"]

    def test_membership_defect(self):
        rng = random.Random(13)
        star = star_from_delta("conj")
        a = rand_symmetric_invertible(2, QI, "conj", rng)
        x = cayley_element(a, star, rng, symmetric=False)
        assert u_defect(x, a, star).is_zero()
        assert membership(x, a, "U", star)


class TestTangent:
    def test_suite(self):
        assert tangent_suite(2, 2, Q, 5, 0)["pass"]
        assert tangent_suite(2, 1, QI, 4, 0)["pass"]

    def test_single(self):
        rng = random.Random(14)
        a = rand_matrix(3, 2, Q, rng)
        x, y = (rand_matrix(2, 3, Q, rng) for _ in range(2))
        ok, _ = tangent_check(x, y, a)
        assert ok

    def test_u_linearization(self):
        rng = random.Random(15)
        for delta, ring in [("id", Q), ("conj", QI), ("qconj", HQ)]:
            a = rand_symmetric_invertible(2, ring, delta, rng)
            x = rand_matrix(2, 2, ring, rng)
            assert u_linearization_check(x, a, delta)
