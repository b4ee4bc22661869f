"""Exact scalar arithmetic for the base rings Q, Q(i), rational quaternions,
and a truncated bivariate series extension of each.

All arithmetic is exact: every component is a ``fractions.Fraction`` and no
floating point is ever produced.  Quaternions use the basis (1, i, j, k) with
ij = k, jk = i, ki = j.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

Q = "Q"
QI = "QI"
HQ = "HQ"

_COMPONENTS = {Q: 1, QI: 2, HQ: 4}

# identity / complex conjugation / quaternion conjugation / split involution
BASE_INVOLUTIONS = ("id", "conj", "qconj", "qsplit")


@dataclass(frozen=True)
class SeriesRing:
    """Truncated polynomial ring base[t, s] with all monomials of per-variable
    degree >= ``degree`` discarded (default: base[t,s]/(t^2, s^2))."""

    base: str
    degree: int = 2

    def __post_init__(self):
        if self.base not in _COMPONENTS:
            raise ValueError(f"unsupported series base ring {self.base!r}")
        if self.degree < 1:
            raise ValueError("truncation degree must be >= 1")


Ring = "str | SeriesRing"


def is_series(ring) -> bool:
    return isinstance(ring, SeriesRing)


def ring_components(ring) -> int:
    """Number of Q-coordinates of one scalar (series rings are not flattened)."""
    if is_series(ring):
        raise ValueError("series scalars have no finite Q-coordinate format")
    return _COMPONENTS[ring]


class Scalar:
    """An exact element of one of the supported rings.

    ``parts`` is a tuple of Fractions (length 1, 2 or 4) for the plain rings,
    or a dict {(deg_t, deg_s): Scalar-over-base} for series rings; zero series
    coefficients are never stored.
    """

    __slots__ = ("ring", "parts")

    def __init__(self, ring, parts):
        self.ring = ring
        if is_series(ring):
            self.parts = {k: v for k, v in parts.items() if not v.is_zero()}
        else:
            parts = tuple(Fraction(p) for p in parts)
            if len(parts) != _COMPONENTS[ring]:
                raise ValueError(f"ring {ring} needs {_COMPONENTS[ring]} components")
            self.parts = parts

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring) -> "Scalar":
        if is_series(ring):
            return Scalar(ring, {})
        return Scalar(ring, (Fraction(0),) * _COMPONENTS[ring])

    @staticmethod
    def one(ring) -> "Scalar":
        if is_series(ring):
            return Scalar(ring, {(0, 0): Scalar.one(ring.base)})
        return Scalar(ring, (Fraction(1),) + (Fraction(0),) * (_COMPONENTS[ring] - 1))

    @staticmethod
    def from_rational(ring, value) -> "Scalar":
        value = Fraction(value)
        if is_series(ring):
            if value == 0:
                return Scalar(ring, {})
            return Scalar(ring, {(0, 0): Scalar.from_rational(ring.base, value)})
        return Scalar(ring, (value,) + (Fraction(0),) * (_COMPONENTS[ring] - 1))

    @staticmethod
    def variable(ring: SeriesRing, name: str) -> "Scalar":
        """The generator t or s of a series ring."""
        if not is_series(ring):
            raise ValueError("variables only exist in series rings")
        exp = {"t": (1, 0), "s": (0, 1)}[name]
        return Scalar(ring, {exp: Scalar.one(ring.base)})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        if is_series(self.ring):
            return not self.parts
        return all(p == 0 for p in self.parts)

    def is_one(self) -> bool:
        return self == Scalar.one(self.ring)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Scalar"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if is_series(self.ring):
            out = dict(self.parts)
            for k, v in other.parts.items():
                out[k] = out[k] + v if k in out else v
            return Scalar(self.ring, out)
        return Scalar(self.ring, tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        if is_series(self.ring):
            return Scalar(self.ring, {k: -v for k, v in self.parts.items()})
        return Scalar(self.ring, tuple(-p for p in self.parts))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        ring = self.ring
        if is_series(ring):
            deg = ring.degree
            out: dict = {}
            for (a1, a2), c1 in self.parts.items():
                for (b1, b2), c2 in other.parts.items():
                    e = (a1 + b1, a2 + b2)
                    if e[0] >= deg or e[1] >= deg:
                        continue
                    prod = c1 * c2
                    out[e] = out[e] + prod if e in out else prod
            return Scalar(ring, out)
        if ring == Q:
            return Scalar(ring, (self.parts[0] * other.parts[0],))
        if ring == QI:
            a, b = self.parts
            c, d = other.parts
            return Scalar(ring, (a * c - b * d, a * d + b * c))
        a1, b1, c1, d1 = self.parts
        a2, b2, c2, d2 = other.parts
        return Scalar(
            ring,
            (
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ),
        )

    def scale(self, r) -> "Scalar":
        """Multiply by a central rational number."""
        r = Fraction(r)
        if is_series(self.ring):
            return Scalar(self.ring, {k: v.scale(r) for k, v in self.parts.items()})
        return Scalar(self.ring, tuple(r * p for p in self.parts))

    def inverse(self) -> "Scalar":
        ring = self.ring
        if is_series(ring):
            const = self.parts.get((0, 0))
            if const is None:
                raise ZeroDivisionError("series with zero constant term is not invertible")
            cinv = const.inverse()
            # x = c(1 + u) with u nilpotent; 1/x = (1 - u + u^2 - ...)/c
            one = Scalar.one(ring)
            u = Scalar(ring, {k: cinv * v for k, v in self.parts.items()}) - one
            acc = one
            term = one
            for _ in range(2 * (ring.degree - 1)):
                term = -(term * u)
                acc = acc + term
            cinv_s = Scalar(ring, {(0, 0): cinv})
            return acc * cinv_s
        if self.is_zero():
            raise ZeroDivisionError("scalar is zero")
        if ring == Q:
            return Scalar(ring, (1 / self.parts[0],))
        n = sum(p * p for p in self.parts)
        conj = self.conjugate("conj" if ring == QI else "qconj")
        return Scalar(ring, tuple(p / n for p in conj.parts))

    # -- involutions -------------------------------------------------------

    def conjugate(self, kind: str) -> "Scalar":
        """Apply a base involution: id, conj (Q(i)), qconj or qsplit (quaternions)."""
        if kind not in BASE_INVOLUTIONS:
            raise ValueError(f"unknown base involution {kind!r}")
        ring = self.ring
        if is_series(ring):
            return Scalar(ring, {k: v.conjugate(kind) for k, v in self.parts.items()})
        if kind == "id":
            return self
        if kind == "conj":
            if ring == Q:
                return self
            if ring != QI:
                raise ValueError("complex conjugation needs ring Q or QI")
            a, b = self.parts
            return Scalar(ring, (a, -b))
        if ring != HQ:
            raise ValueError(f"{kind} needs ring HQ")
        a, b, c, d = self.parts
        if kind == "qconj":
            return Scalar(ring, (a, -b, -c, -d))
        # qsplit: j * qconj(x) * j^{-1}; fixes 1, i, k and negates j
        return Scalar(ring, (a, b, -c, d))

    # -- flattening --------------------------------------------------------

    def flatten(self) -> tuple:
        """Q-coordinates of this scalar (1, 2 or 4 Fractions)."""
        if is_series(self.ring):
            raise ValueError("series scalars are not flattened")
        return self.parts

    @staticmethod
    def unflatten(ring, comps: Iterable) -> "Scalar":
        return Scalar(ring, tuple(Fraction(c) for c in comps))

    # -- series access -----------------------------------------------------

    def coefficient(self, exp: tuple) -> "Scalar":
        """Coefficient of t^a s^b in a series scalar."""
        if not is_series(self.ring):
            raise ValueError("not a series scalar")
        return self.parts.get(exp, Scalar.zero(self.ring.base))

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar) or self.ring != other.ring:
            return NotImplemented if not isinstance(other, Scalar) else False
        return self.parts == other.parts

    def __hash__(self):
        if is_series(self.ring):
            return hash((self.ring, tuple(sorted((k, v) for k, v in self.parts.items()))))
        return hash((self.ring, self.parts))

    def __repr__(self):
        return f"Scalar({self.ring}, {format_scalar(self)!r})" if not is_series(self.ring) else f"Scalar({self.ring}, {self.parts})"


def rational(value) -> Scalar:
    return Scalar.from_rational(Q, value)


def gaussian(re, im=0) -> Scalar:
    return Scalar(QI, (Fraction(re), Fraction(im)))


def quaternion(a, b=0, c=0, d=0) -> Scalar:
    return Scalar(HQ, (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))


def quat_conj(x: Scalar) -> Scalar:
    """Standard quaternion conjugation a+bi+cj+dk -> a-bi-cj-dk."""
    return x.conjugate("qconj")


def quat_split(x: Scalar) -> Scalar:
    """Split involution j * conj(x) * j^{-1}; fixes span{1, i, k}, negates j."""
    return x.conjugate("qsplit")


def series_ring(base=Q, degree=2) -> SeriesRing:
    return SeriesRing(base, degree)


def series_mul(a: Scalar, b: Scalar) -> Scalar:
    """Product in a truncated series ring (coefficient-wise convolution)."""
    if not (is_series(a.ring) and a.ring == b.ring):
        raise ValueError("series_mul needs two series over the same ring")
    return a * b


# -- text format: "p/q", "p/q+r/si", "a+bi+cj+dk" --------------------------

_TERM = _re.compile(r"([+-]?[^+-]*)")


def _fmt_frac(f: Fraction) -> str:
    return str(f)


def format_scalar(s: Scalar) -> str:
    ring = s.ring
    if is_series(ring):
        raise ValueError("series scalars have no text format")
    if ring == Q:
        return _fmt_frac(s.parts[0])
    units = ("", "i") if ring == QI else ("", "i", "j", "k")
    terms = []
    for comp, unit in zip(s.parts, units):
        sign = "-" if comp < 0 else "+"
        terms.append(f"{sign}{_fmt_frac(abs(comp))}{unit}")
    out = "".join(terms)
    return out[1:] if out.startswith("+") else out


def parse_scalar(ring, text: str) -> Scalar:
    if is_series(ring):
        raise ValueError("series scalars have no text format")
    ncomp = _COMPONENTS[ring]
    comps = [Fraction(0)] * ncomp
    unit_index = {"": 0, "i": 1, "j": 2, "k": 3}
    for term in _TERM.findall(text.replace(" ", "")):
        if not term:
            continue
        m = _re.fullmatch(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)", term)
        if m is None:
            raise ValueError(f"bad scalar literal {text!r}")
        sign, mag, unit = m.groups()
        if mag is None and not unit:
            raise ValueError(f"bad scalar literal {text!r}")
        idx = unit_index[unit]
        if idx >= ncomp:
            raise ValueError(f"unit {unit!r} not available in ring {ring}")
        val = Fraction(mag) if mag else Fraction(1)
        comps[idx] += -val if sign == "-" else val
    return Scalar(ring, tuple(comps))
