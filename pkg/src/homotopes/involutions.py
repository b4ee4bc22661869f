"""Declarative involutions and automorphisms of matrix algebras, with exact
single and joint eigenspace decompositions.

A ``MatrixInvolution`` acts by X -> B * core(X) * B^{-1} where core(X) is
delta(X)^t for an antiautomorphism (delta an entrywise base involution) or
delta(X) for an automorphism.  Construction validates involutivity and the
(anti)morphism property on the elementary-matrix basis, so malformed
declarations are rejected eagerly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

import numpy as np

from . import kernel
from .matrices import Matrix, Subspace
from .scalars import BASE_INVOLUTIONS, Scalar, ring_components


class MatrixInvolution:
    """An involutive (anti)automorphism of M(n, n; ring)."""

    __slots__ = ("kind", "delta", "twist", "n", "ring", "_twist_inv")

    def __init__(self, kind: str, delta: str, n: int, ring, twist: Matrix | None = None, validate: bool = True):
        if kind not in ("anti", "auto"):
            raise ValueError("kind must be 'anti' or 'auto'")
        if delta not in BASE_INVOLUTIONS:
            raise ValueError(f"unknown base involution {delta!r}")
        self.kind = kind
        self.delta = delta
        self.n = n
        self.ring = ring
        self.twist = twist
        self._twist_inv = twist.inverse() if twist is not None else None
        if validate:
            self._validate()

    # -- construction helpers ----------------------------------------------

    @staticmethod
    def transpose_inv(n: int, ring, delta: str = "id") -> "MatrixInvolution":
        """The basic involution X -> delta(X)^t."""
        return MatrixInvolution("anti", delta, n, ring)

    @staticmethod
    def twisted(base: "MatrixInvolution", b: Matrix) -> "MatrixInvolution":
        """B_* composed with ``base``: X -> B * base(X) * B^{-1}.

        Valid whenever base(B) = B^{-1} or -B^{-1} (checked by validation).
        """
        if base.twist is not None:
            raise ValueError("compose twists by multiplying the matrices first")
        return MatrixInvolution(base.kind, base.delta, base.n, base.ring, twist=b)

    # -- action ------------------------------------------------------------

    def __call__(self, x: Matrix) -> Matrix:
        if (x.rows, x.cols, x.ring) != (self.n, self.n, self.ring):
            raise ValueError("matrix does not live in this involution's algebra")
        core = x.conjugate(self.delta)
        if self.kind == "anti":
            core = core.transpose()
        if self.twist is not None:
            core = self.twist @ core @ self._twist_inv
        return core

    def _basis(self):
        n, ring = self.n, self.ring
        units = [Scalar.one(ring)]
        k = ring_components(ring)
        for c in range(1, k):
            comps = [Fraction(0)] * k
            comps[c] = Fraction(1)
            units.append(Scalar.unflatten(ring, comps))
        return [Matrix.elementary(n, n, i, j, ring, u) for i in range(n) for j in range(n) for u in units]

    def _apply_arr(self, x: "kernel.Arr") -> "kernel.Arr":
        """The declared action on a batched coefficient array (exact)."""
        out = x.conj(self.delta)
        if self.kind == "anti":
            out = out.transpose_mat()
        if self.twist is not None:
            b = kernel.Arr.from_matrix(self.twist)
            binv = kernel.Arr.from_matrix(self._twist_inv)
            out = kernel.matrix_mul(kernel.matrix_mul(b, out), binv)
        return out

    def _validate(self):
        basis = self._basis()
        images = [self(b) for b in basis]
        for b, img in zip(basis, images):
            if self(img) != b:
                raise ValueError("declared action is not involutive")
        # (anti)morphism property, batched over all basis pairs
        barr = kernel.Arr.from_matrices(basis)
        iarr = kernel.Arr.from_matrices(images)
        prods = kernel.matrix_mul(
            kernel.Arr(barr.a[:, None], barr.den, barr.bound, barr.ring),
            kernel.Arr(barr.a[None, :], barr.den, barr.bound, barr.ring),
        )
        got = self._apply_arr(prods)
        lhs = kernel.Arr(iarr.a[None, :] if self.kind == "anti" else iarr.a[:, None],
                         iarr.den, iarr.bound, iarr.ring)
        rhs = kernel.Arr(iarr.a[:, None] if self.kind == "anti" else iarr.a[None, :],
                         iarr.den, iarr.bound, iarr.ring)
        expect = kernel.matrix_mul(lhs, rhs)
        if not np.array_equal(got.a * expect.den, expect.a * got.den):
            raise ValueError(f"declared action is not an {self.kind}morphism")

    def commutes_with(self, other: "MatrixInvolution") -> bool:
        if (self.n, self.ring) != (other.n, other.ring):
            raise ValueError("ambient mismatch")
        return all(self(other(b)) == other(self(b)) for b in self._basis())

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "delta": self.delta,
            "transpose": self.kind == "anti",
            "twist": "identity" if self.twist is None else self.twist.to_json(),
        }


def commute(tau: MatrixInvolution, sigma: MatrixInvolution) -> bool:
    return tau.commutes_with(sigma)


class JointDecomposition:
    """Joint eigenspace decomposition of k pairwise commuting involutions."""

    __slots__ = ("involutions", "pieces", "ambient")

    def __init__(self, involutions, pieces):
        self.involutions = tuple(involutions)
        self.pieces = dict(pieces)
        inv0 = self.involutions[0]
        self.ambient = (inv0.n, inv0.n, inv0.ring)

    def piece(self, signs) -> Subspace:
        return self.pieces[tuple(signs)]

    def piece_of(self, a: Matrix):
        """The sign vector whose piece contains ``a``, or None."""
        for signs, sub in self.pieces.items():
            if sub.contains(a):
                return signs
        return None

    def dims(self) -> dict:
        return {signs: sub.dim for signs, sub in self.pieces.items()}

    def check_direct_sum(self) -> bool:
        total = sum(sub.dim for sub in self.pieces.values())
        n, _, ring = self.ambient
        if total != n * n * ring_components(ring):
            return False
        pieces = list(self.pieces.values())
        for i in range(len(pieces)):
            for j in range(i + 1, len(pieces)):
                if pieces[i].intersect(pieces[j]).dim != 0:
                    return False
        return True


def joint_eigenspaces(involutions) -> JointDecomposition:
    """Exact joint eigenspaces via iterated projections (X +- tau(X)) / 2."""
    involutions = list(involutions)
    if not involutions:
        raise ValueError("need at least one involution")
    for i, t in enumerate(involutions):
        for s in involutions[i + 1:]:
            if not t.commutes_with(s):
                raise ValueError("involutions do not pairwise commute")
    inv0 = involutions[0]
    ambient = (inv0.n, inv0.n, inv0.ring)
    basis = inv0._basis()
    pieces = {}
    for signs in iproduct((1, -1), repeat=len(involutions)):
        projected = []
        for b in basis:
            x = b
            for tau, s in zip(involutions, signs):
                img = tau(x)
                x = (x + img).scale(Fraction(1, 2)) if s == 1 else (x - img).scale(Fraction(1, 2))
            if not x.is_zero():
                projected.append(x)
        pieces[signs] = Subspace.span(projected) if projected else Subspace.zero(ambient)
    return JointDecomposition(involutions, pieces)
