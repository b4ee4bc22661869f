"""Unit tests for exact matrices, block matrices and rational subspaces."""

import random
from fractions import Fraction

import pytest

from homotopes.families import rand_matrix, sym_space
from homotopes.matrices import (Matrix, Subspace, block_F, block_I, block_Ipq,
                                block_J, nullspace, rref)
from homotopes.scalars import HQ, Q, QI, Scalar, gaussian


class TestMatrixAlgebra:
    def setup_method(self):
        self.rng = random.Random(1)

    def test_identity(self):
        for ring in (Q, QI, HQ):
            e = Matrix.identity(3, ring)
            m = rand_matrix(3, 3, ring, self.rng)
            assert e @ m == m and m @ e == m

    def test_associativity(self):
        a = rand_matrix(2, 3, HQ, self.rng)
        b = rand_matrix(3, 2, HQ, self.rng)
        c = rand_matrix(2, 2, HQ, self.rng)
        assert (a @ b) @ c == a @ (b @ c)

    def test_inverse_roundtrip(self):
        for ring in (Q, QI, HQ):
            while True:
                m = rand_matrix(3, 3, ring, self.rng)
                try:
                    inv = m.inverse()
                    break
                except ValueError:
                    continue
            assert m @ inv == Matrix.identity(3, ring)
            assert inv @ m == Matrix.identity(3, ring)

    def test_singular_inverse_raises(self):
        with pytest.raises(ZeroDivisionError):
            Matrix.zeros(2, 2, Q).inverse()

    def test_dagger_antimultiplicative(self):
        a = rand_matrix(2, 2, QI, self.rng)
        b = rand_matrix(2, 2, QI, self.rng)
        assert (a @ b).dagger("conj") == b.dagger("conj") @ a.dagger("conj")
        a = rand_matrix(2, 2, HQ, self.rng)
        b = rand_matrix(2, 2, HQ, self.rng)
        for delta in ("qconj", "qsplit"):
            assert (a @ b).dagger(delta) == b.dagger(delta) @ a.dagger(delta)

    def test_json_roundtrip(self):
        for ring in (Q, QI, HQ):
            m = rand_matrix(2, 3, ring, self.rng)
            assert Matrix.from_json(m.to_json()) == m

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            rand_matrix(2, 2, Q, self.rng) @ rand_matrix(3, 3, Q, self.rng)


class TestBlockMatrices:
    def test_ipq_is_involution(self):
        m = block_Ipq(1, 2)
        assert m @ m == Matrix.identity(3, Q)

    def test_block_i_is_involution(self):
        m = block_I(2)
        assert m @ m == Matrix.identity(4, Q)
        assert m == block_J(2) @ block_F(2)

    def test_block_j_squares_to_minus_one(self):
        m = block_J(2)
        assert m @ m == Matrix.identity(4, Q).scale(Fraction(-1))

    def test_block_f_is_involution(self):
        m = block_F(2)
        assert m @ m == Matrix.identity(4, Q)


class TestRref:
    def test_known_rank(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)],
                [Fraction(0), Fraction(1)]]
        basis, pivots = rref(rows)
        assert len(basis) == 2 and pivots == [0, 1]

    def test_nullspace(self):
        rows = [[Fraction(1), Fraction(1), Fraction(0)]]
        null = nullspace(rows, 3)
        assert len(null) == 2
        for vec in null:
            assert sum(r * v for r, v in zip(rows[0], vec)) == 0


class TestSubspace:
    def setup_method(self):
        self.rng = random.Random(2)

    def test_span_and_contains(self):
        a = rand_matrix(2, 2, Q, self.rng)
        b = rand_matrix(2, 2, Q, self.rng)
        sp = Subspace.span([a, b, a + b])
        assert sp.dim <= 2
        assert sp.contains(a - b)
        assert sp.contains(a.scale(Fraction(7, 3)))

    def test_coordinates_roundtrip(self):
        sp = sym_space(3, Q)
        m = rand_matrix(3, 3, Q, self.rng)
        m = m + m.transpose()
        coords = sp.coordinates(m)
        assert coords is not None
        assert sp.from_coordinates(coords) == m

    def test_intersect_sum_dims(self):
        amb = (2, 2, Q)
        e = [Matrix.elementary(2, 2, i, j, Q) for i in range(2) for j in range(2)]
        s1 = Subspace.span([e[0], e[1]])
        s2 = Subspace.span([e[1], e[2]])
        inter = s1.intersect(s2)
        total = s1.sum(s2)
        assert inter.dim == 1 and total.dim == 3
        assert inter.dim + total.dim == s1.dim + s2.dim
        assert inter.contains(e[1])

    def test_zero_and_full(self):
        amb = (2, 2, QI)
        assert Subspace.zero(amb).dim == 0
        assert Subspace.full(amb).dim == 8  # 2 Q-coordinates per entry

    def test_membership_respects_ring_structure(self):
        i = gaussian(0, 1)
        m = Matrix.identity(2, QI)
        sp = Subspace.span([m])
        # Q-span, not QI-span: i*m is not a rational multiple of m
        assert not sp.contains(m.scalar_mul(i))
