"""Exact polynomial algebra for spectral data.

Monic graded polynomials in the spectral variable model characteristic
polynomials of twisted Higgs fields; tuples of them, shaped by a sheet's
multiplicity profile, are the points of the reduced base.  The composition
map multiplies the i-th factor in with multiplicity i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .partitions import MultiplicityProfile, Partition, profile
from .scalars import RatPoly, Scalar, as_scalar, scalar_is_zero

LAMBDA = "λ"


@dataclass(frozen=True)
class GradedPolynomial:
    """Monic polynomial a(λ) = λ^d + a_1 λ^{d-1} + ... + a_d.

    The coefficient of λ^{d-k} carries weight k.  The constant polynomial 1
    (d = 0) is permitted as the empty-cover placeholder.  Coefficients are
    exact scalars (rationals or chart-variable polynomials).
    """

    coeffs: Tuple[Scalar, ...]

    def __init__(self, coeffs: Sequence = ()):
        object.__setattr__(self, "coeffs", tuple(as_scalar(c) for c in coeffs))

    @classmethod
    def _trusted(cls, coeffs) -> "GradedPolynomial":
        # internal: coefficients already exact scalars
        out = object.__new__(cls)
        object.__setattr__(out, "coeffs", tuple(coeffs))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int) -> Scalar:
        """Weight-k coefficient a_k (k = 0 gives the leading 1)."""
        if k == 0:
            return Fraction(1)
        if not 1 <= k <= self.degree:
            raise ValueError("no coefficient of weight %d in degree %d" % (k, self.degree))
        return self.coeffs[k - 1]

    @classmethod
    def one(cls) -> "GradedPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, d: int) -> "GradedPolynomial":
        return cls((Fraction(0),) * d)

    @classmethod
    def from_roots(cls, roots: Sequence) -> "GradedPolynomial":
        out = cls.one()
        for r in roots:
            out = out * cls((-as_scalar(r),))
        return out

    @classmethod
    def from_dense(cls, dense: Sequence) -> "GradedPolynomial":
        """From descending-power coefficients; leading coefficient must be 1."""
        dense = [as_scalar(c) for c in dense]
        if not dense or dense[0] != 1:
            raise ValueError("graded polynomials are monic")
        return cls(tuple(dense[1:]))

    def dense(self) -> List[Scalar]:
        """Descending-power coefficient list [1, a_1, ..., a_d]."""
        return [Fraction(1), *self.coeffs]

    def __mul__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return GradedPolynomial._trusted(_poly_mul(self.dense(), other.dense())[1:])

    def __pow__(self, k: int) -> "GradedPolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = GradedPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def divmod(self, other: "GradedPolynomial"):
        """Division by another monic polynomial; exact in the coefficient ring.

        Both operands are monic, so the quotient is monic; a divisor of
        larger degree is an error rather than a zero quotient.
        """
        if other.degree > self.degree:
            raise ValueError("divisor degree exceeds dividend degree")
        quo, rem = _poly_divmod_monic(self.dense(), other.dense())
        return GradedPolynomial.from_dense(quo), rem

    def divides(self, other: "GradedPolynomial") -> bool:
        if self.degree > other.degree:
            return False
        _, rem = other.divmod(self)
        return all(scalar_is_zero(c) for c in rem)

    def is_squarefree(self) -> bool:
        return _poly_degree(poly_gcd(self.dense(), _poly_derivative(self.dense()))) == 0

    def evaluate(self, value) -> Scalar:
        out = as_scalar(0)
        for c in self.dense():
            out = out * value + c
        return out

    def __str__(self):
        terms = []
        for k, c in enumerate(self.dense()):
            d = self.degree - k
            if scalar_is_zero(c) and self.degree > 0:
                continue
            cs = str(c)
            if isinstance(c, RatPoly) and not c.is_constant():
                cs = "(%s)" % cs
            if d == 0:
                terms.append(cs)
            else:
                var = LAMBDA if d == 1 else "%s^%d" % (LAMBDA, d)
                terms.append(var if cs == "1" else ("-%s" % var if cs == "-1" else "%s*%s" % (cs, var)))
        if not terms:
            return "1"
        out = terms[0]
        for term in terms[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out

    def to_json(self):
        from .scalars import format_scalar

        return {"degree": self.degree, "coeffs": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "GradedPolynomial":
        from .scalars import parse_scalar

        coeffs = [parse_scalar(c) for c in obj["coeffs"]]
        if len(coeffs) != obj["degree"]:
            raise ValueError("degree/coefficient mismatch in %r" % (obj,))
        return cls(coeffs)


@dataclass(frozen=True)
class SheetBasePoint:
    """A tuple (ξ_1, ..., ξ_s) of monic factors with deg ξ_i = l_i."""

    profile: MultiplicityProfile
    factors: Tuple[GradedPolynomial, ...]

    def __init__(self, profile: MultiplicityProfile, factors: Sequence[GradedPolynomial]):
        factors = tuple(factors)
        if len(factors) != profile.s:
            raise ValueError("expected %d factors, got %d" % (profile.s, len(factors)))
        for i, xi in enumerate(factors, start=1):
            if xi.degree != profile.l(i):
                raise ValueError("factor %d has degree %d, profile wants %d" % (i, xi.degree, profile.l(i)))
        object.__setattr__(self, "profile", profile)
        object.__setattr__(self, "factors", factors)

    @property
    def total_degree(self) -> int:
        return sum(i * xi.degree for i, xi in enumerate(self.factors, start=1))


def mu_s(point: SheetBasePoint) -> GradedPolynomial:
    """Composition into the full base: the product of ξ_i^i."""
    return product_with_multiplicities(point.factors)


def product_with_multiplicities(factors: Sequence[GradedPolynomial]) -> GradedPolynomial:
    out = GradedPolynomial.one()
    for i, xi in enumerate(factors, start=1):
        out = out * xi**i
    return out


def min_poly(point: SheetBasePoint) -> GradedPolynomial:
    """Each factor taken once; divides mu_s(point)."""
    out = GradedPolynomial.one()
    for xi in point.factors:
        out = out * xi
    return out


def in_heart(point: SheetBasePoint) -> bool:
    """True iff every factor is squarefree (each spectral factor reduced)."""
    return all(xi.is_squarefree() for xi in point.factors)


def witness_noninjectivity(a) -> Tuple[SheetBasePoint, SheetBasePoint]:
    """Two distinct non-heart points with the same composition image.

    For the profile of (2,1,1) and a != 0, the points ((λ-a)^2, (λ+a)) and
    ((λ+a)^2, (λ-a)) both compose to (λ-a)^2 (λ+a)^2.
    """
    a = as_scalar(a)
    if scalar_is_zero(a):
        raise ValueError("witness needs a nonzero coefficient")
    prof = profile(Partition((2, 1, 1)))
    minus = GradedPolynomial((-a,))
    plus = GradedPolynomial((a,))
    p1 = SheetBasePoint(prof, (minus * minus, plus))
    p2 = SheetBasePoint(prof, (plus * plus, minus))
    image1, image2 = mu_s(p1), mu_s(p2)
    assert image1 == image2
    assert not in_heart(p1) and not in_heart(p2)
    return p1, p2


def sp4_dix_image(b) -> GradedPolynomial:
    """The spectral image λ^4 - b^2 λ^2 of the rank-2 symplectic slice point b."""
    b = as_scalar(b)
    return GradedPolynomial((Fraction(0), -b * b, Fraction(0), Fraction(0)))


# ---------------------------------------------------------------------------
# Dense polynomial helpers over the exact scalar domain.
#
# Dense lists are descending-power coefficient sequences with a nonzero
# leading entry (the zero polynomial is the empty list).


def _poly_trim(p: List[Scalar]) -> List[Scalar]:
    k = 0
    while k < len(p) and scalar_is_zero(p[k]):
        k += 1
    return p[k:]


def _poly_degree(p: List[Scalar]) -> int:
    return len(p) - 1


def _poly_mul(p: List[Scalar], q: List[Scalar]) -> List[Scalar]:
    if not p or not q:
        return []
    if all(type(c) is Fraction for c in p) and all(type(c) is Fraction for c in q):
        # exact integer convolution after clearing denominators
        from math import lcm

        dp = lcm(*(c.denominator for c in p))
        dq = lcm(*(c.denominator for c in q))
        ip = [c.numerator * (dp // c.denominator) for c in p]
        iq = [c.numerator * (dq // c.denominator) for c in q]
        out = [0] * (len(ip) + len(iq) - 1)
        for i, a in enumerate(ip):
            if a:
                for j, b in enumerate(iq):
                    out[i + j] += a * b
        dd = dp * dq
        return [Fraction(v, dd) for v in out]
    zero = Fraction(0)
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _poly_derivative(p: List[Scalar]) -> List[Scalar]:
    d = len(p) - 1
    return _poly_trim([c * (d - i) for i, c in enumerate(p[:-1])])


def _poly_divmod_monic(p: List[Scalar], q: List[Scalar]):
    """Divide by a monic q via synthetic division (exact in any ring)."""
    if not q or q[0] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dq = len(rem) - len(q)
    if dq < 0:
        return [], rem
    quo = []
    for k in range(dq + 1):
        c = rem[k]
        quo.append(c)
        if not scalar_is_zero(c):
            for i in range(1, len(q)):
                rem[k + i] = rem[k + i] - c * q[i]
    return quo, _poly_trim(rem[dq + 1 :])


def _scalar_div(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(b, Fraction):
        return a / b
    if b.is_constant():
        return a / b.constant_value()
    if isinstance(a, Fraction):
        a = RatPoly.constant(a, b.symbol)
    return a / b


def _lift(p: List[Scalar]) -> Tuple[List[RatPoly], str]:
    symbol = "t"
    for c in p:
        if isinstance(c, RatPoly) and not c.is_constant():
            symbol = c.symbol
    return [c if isinstance(c, RatPoly) else RatPoly.constant(c, symbol) for c in p], symbol


def _content(p: List[RatPoly], symbol: str) -> RatPoly:
    g = RatPoly([], symbol)
    for c in p:
        g = g.gcd(c) if not g.is_zero() else (c / c.leading() if not c.is_zero() else g)
    return g if not g.is_zero() else RatPoly.constant(1, symbol)


def _primitive(p: List[RatPoly], symbol: str) -> List[RatPoly]:
    if not p:
        return p
    cont = _content(p, symbol)
    return [c / cont for c in p]


def _pseudo_rem(p: List[RatPoly], q: List[RatPoly]) -> List[RatPoly]:
    rem = list(p)
    lead = q[0]
    while len(rem) >= len(q) and rem:
        c = rem[0]
        rem = [x * lead for x in rem]
        for i in range(len(q)):
            rem[i] = rem[i] - c * q[i]
        k = 0
        while k < len(rem) and rem[k].is_zero():
            k += 1
        rem = rem[k:]
        if k == 0:  # leading term failed to cancel; cannot happen
            raise AssertionError("pseudo-division did not reduce degree")
    return rem


def poly_gcd(p: List[Scalar], q: List[Scalar]) -> List[Scalar]:
    """Gcd of dense polynomials over the scalar domain.

    Rational coefficients use the Euclidean algorithm over Q; coefficient
    polynomials use the content-normalised (primitive) pseudo-remainder
    sequence over Q[t].  The result is normalised with leading coefficient 1
    (and primitive content in the Q[t] case).
    """
    p, q = _poly_trim(list(p)), _poly_trim(list(q))
    if all(isinstance(c, Fraction) or c.is_constant() for c in p + q):
        a = [c if isinstance(c, Fraction) else c.constant_value() for c in p]
        b = [c if isinstance(c, Fraction) else c.constant_value() for c in q]
        while b:
            a, b = b, _frac_rem(a, b)
        return [c / a[0] for c in a] if a else []
    ap, symbol = _lift(p)
    bp, _ = _lift(q)
    ap, bp = _primitive(ap, symbol), _primitive(bp, symbol)
    if len(ap) < len(bp):
        ap, bp = bp, ap
    while bp:
        rem = _primitive(_pseudo_rem(ap, bp), symbol)
        ap, bp = bp, rem
    if not ap:
        return []
    ap = _primitive(ap, symbol)
    return [_scalar_div(c, ap[0]) if ap[0].is_constant() else c for c in ap]


def _frac_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    rem = list(a)
    lead = b[0]
    while len(rem) >= len(b) and rem:
        c = rem[0] / lead
        for i in range(len(b)):
            rem[i] -= c * b[i]
        k = 0
        while k < len(rem) and rem[k] == 0:
            k += 1
        rem = rem[k:]
        if k == 0:
            raise AssertionError("division did not reduce degree")
    return rem
