"""Rational functions in a single variable u."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable

from nslax.exactalg.polynomial import ParamPoly, UniPoly, _as_unipoly, poly_gcd


class RationalFunction:
    """``numerator / denominator`` with UniPoly parts.

    With rational coefficients the constructor canonicalizes (coprime parts,
    monic denominator). With ParamPoly coefficients no gcd is available, so
    canonical form is only guaranteed when built through
    :meth:`from_linear_factors`; equality is cross-multiplication either way.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_unipoly(num)
        den = UniPoly([1]) if den is None else _as_unipoly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.has_field_coefficients() and den.has_field_coefficients():
            g = poly_gcd(num, den) if not num.is_zero() else den
            num, den = num // g, den // g
            lc = den.leading()
            if lc != 1:
                num, den = num * (1 / Fraction(lc)), den.monic()
        else:
            lc = den.leading()
            if isinstance(lc, ParamPoly) and lc.is_constant() and lc != 1:
                inv = 1 / lc.constant_value()
                num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_linear_factors(cls, zeros: Iterable, poles: Iterable, scale=1) -> "RationalFunction":
        """``scale * prod(u - z) / prod(u - p)`` with common factors cancelled.

        Factors ``u - c`` with c linear in (e1, e2) are irreducible and monic in
        u, so cancelling equal roots gives the reduced form.
        """
        top = Counter(zeros)
        bottom = Counter(poles)
        common = top & bottom
        top -= common
        bottom -= common
        return cls(UniPoly.from_roots(sorted(top.elements(), key=_root_key)) * scale,
                   UniPoly.from_roots(sorted(bottom.elements(), key=_root_key)))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * _as_rf(other).reciprocal()

    def __call__(self, u):
        d = self.den(u)
        if d == 0:
            raise ZeroDivisionError(f"pole at u = {u}")
        return self.num(u) / d

    def specialize(self, e1, e2) -> "RationalFunction":
        return RationalFunction(self.num.specialize(e1, e2), self.den.specialize(e1, e2))

    def series_at_infinity(self, order: int) -> list:
        """Coefficients c_0..c_order of the expansion sum_k c_k u^(-k) at u = infinity.

        Requires deg num <= deg den.
        """
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            raise ValueError("not regular at infinity")
        # work in x = 1/u: num(u)/den(u) = x^(dd-dn) * N(x)/D(x), with N, D the reversed coefficient lists
        N = list(reversed(self.num.coeffs))
        D = list(reversed(self.den.coeffs))
        shift = dd - dn
        q = []
        r = N + [0] * (order + 1)
        lead = D[0]
        for k in range(order + 1 - shift if order + 1 > shift else 0):
            c = r[k] if lead == 1 else r[k] / lead
            q.append(c)
            for j, d in enumerate(D):
                if k + j < len(r):
                    r[k + j] = r[k + j] - c * d
        out = [Fraction(0)] * shift + q
        return out[: order + 1]

    def residue(self, point):
        """Residue at a simple pole."""
        if self.den(point) != 0:
            raise ValueError(f"{point} is not a pole")
        dprime = self.den.derivative()(point)
        if dprime == 0:
            raise ValueError(f"pole at {point} is not simple")
        return self.num(point) / dprime

    def partial_fractions(self, poles) -> tuple[UniPoly, dict]:
        """Polynomial part and residues, assuming the denominator splits with simple roots ``poles``.

        The decomposition is checked by reassembling the function exactly.
        """
        poles = list(poles)
        if UniPoly.from_roots(poles) != self.den:
            raise ValueError("poles do not split the denominator exactly")
        poly_part, _ = self.num.divmod(self.den)
        res = {p: self.residue(p) for p in poles}
        rebuilt = RationalFunction(poly_part)
        for p, r in res.items():
            rebuilt = rebuilt + RationalFunction(UniPoly([r]), UniPoly([-p, 1]))
        if rebuilt != self:
            raise ArithmeticError("partial fraction reassembly failed")
        return poly_part, res

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _as_rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(x)


def _root_key(c):
    if isinstance(c, ParamPoly):
        return (1, tuple(sorted((k, v) for k, v in c.items())))
    return (0, ((Fraction(c),),))
