"""Bivariate polynomials in (e1, e2) and univariate polynomials in u."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from nslax.errors import NonHomogeneousError, NotDivisibleError

Rational = Fraction

ZERO_DEGREE = -1  # degree of the zero UniPoly


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"`` (or a bare integer) into a Fraction. Floats are refused."""
    if isinstance(text, float):
        raise TypeError("floating point values are not accepted")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def format_rational(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction))


class ParamPoly:
    """Sparse polynomial in e1, e2 with Fraction coefficients.

    Terms map ``(a, b) -> c`` for ``c * e1**a * e2**b``. Instances are
    immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError("exponents must be nonnegative")
                c = Fraction(c)
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c) -> "ParamPoly":
        return cls({(0, 0): c})

    @classmethod
    def e1(cls) -> "ParamPoly":
        return cls({(1, 0): 1})

    @classmethod
    def e2(cls) -> "ParamPoly":
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, c1, c2) -> "ParamPoly":
        """``c1*e1 + c2*e2``."""
        return cls({(1, 0): c1, (0, 1): c2})

    @classmethod
    def coerce(cls, x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if _is_scalar(x):
            return cls.const(x)
        return NotImplemented

    # inspection
    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return ZERO_DEGREE
        return max(a + b for a, b in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {a + b for a, b in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def sorted_terms(self, descending: bool = False) -> list[tuple[tuple[int, int], Fraction]]:
        """Terms in graded-lex order on (a, b)."""
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]), reverse=descending)

    def leading(self) -> tuple[tuple[int, int], Fraction]:
        return max(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]))

    # arithmetic
    def __add__(self, other):
        other = ParamPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = ParamPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = ParamPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            return ParamPoly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, ParamPoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ParamPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: "ParamPoly") -> "ParamPoly":
        """Quotient ``self / other``; raises NotDivisibleError unless exact."""
        other = ParamPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_constant():
            return self * (1 / other.constant_value())
        (A, B), lc = other.leading()
        rem = self
        quot: dict[tuple[int, int], Fraction] = {}
        while not rem.is_zero():
            (a, b), c = rem.leading()
            if a < A or b < B:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            q = ParamPoly({(a - A, b - B): c / lc})
            quot[(a - A, b - B)] = c / lc
            rem = rem - q * other
        return ParamPoly(quot)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1 / Fraction(other))
        if isinstance(other, ParamPoly):
            return self.exact_div(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return ParamPoly.const(other).exact_div(self)
        return NotImplemented

    def __eq__(self, other):
        if _is_scalar(other):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # substitution
    def evaluate(self, e1, e2) -> Fraction:
        e1, e2 = Fraction(e1), Fraction(e2)
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            total += c * e1**a * e2**b
        return total

    __call__ = evaluate

    def swap(self) -> "ParamPoly":
        """Exchange e1 and e2."""
        return ParamPoly({(b, a): c for (a, b), c in self._terms.items()})

    # serialization
    def to_json(self) -> list[dict]:
        return [{"a": a, "b": b, "c": format_rational(c)} for (a, b), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "ParamPoly":
        return cls({(int(t["a"]), int(t["b"])): parse_rational(t["c"]) for t in data})

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (a, b), c in self.sorted_terms(descending=True):
            mono = []
            if a:
                mono.append("e1" if a == 1 else f"e1^{a}")
            if b:
                mono.append("e2" if b == 1 else f"e2^{b}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(mono)
            else:
                body = f"{abs(c)}*" + "*".join(mono)
            pieces.append(("-" if c < 0 else "+", body))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"ParamPoly({self})"


def poly_eval(p, e1, e2) -> Fraction:
    """Specialize e1, e2 in ``p``; plain rationals pass through unchanged."""
    if isinstance(p, ParamPoly):
        return p.evaluate(e1, e2)
    return Fraction(p)


def _lagrange(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients (low to high) of the interpolant through (xs, ys)."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            # multiply basis by (x - xs[j])
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k] -= c * xs[j]
                nxt[k + 1] += c
            basis = nxt
            denom *= xs[i] - xs[j]
        scale = ys[i] / denom
        for k, c in enumerate(basis):
            coeffs[k] += c * scale
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def interpolate_homogeneous(samples: Sequence[tuple[object, object]], degree: int, e2=1) -> ParamPoly:
    """Recover a homogeneous polynomial of total degree ``degree`` from values at (x, e2).

    ``samples`` are ``(x, P(x, e2))`` pairs with pairwise distinct x. Extra
    samples beyond ``degree + 1`` act as a consistency check: if the full
    interpolant has degree above ``degree`` the data is not homogeneous of
    that degree and NonHomogeneousError is raised.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    xs = [Fraction(x) for x, _ in samples]
    ys = [Fraction(y) for _, y in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("sample abscissae must be distinct")
    if len(xs) < degree + 1:
        raise ValueError(f"need at least {degree + 1} samples, got {len(xs)}")
    e2 = Fraction(e2)
    if e2 == 0:
        raise ValueError("e2 must be nonzero for homogenization")
    coeffs = _lagrange(xs, ys)
    if len(coeffs) - 1 > degree:
        raise NonHomogeneousError(
            f"samples need degree {len(coeffs) - 1} > {degree}; not homogeneous of degree {degree}"
        )
    # P(x, e2) = sum_a c_a x^a e2^(d-a)  =>  c_a = coeff_a / e2^(d-a)
    return ParamPoly({(a, degree - a): c / e2 ** (degree - a) for a, c in enumerate(coeffs)})


class UniPoly:
    """Univariate polynomial, coefficients low to high.

    Coefficients may be Fractions or ParamPolys. Trailing zeros are trimmed,
    so the zero polynomial has no coefficients and degree ZERO_DEGREE.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def has_field_coefficients(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.coeffs)

    def __add__(self, other):
        other = _as_unipoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_unipoly(other))

    def __rsub__(self, other):
        return _as_unipoly(other) - self

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, ParamPoly):
            return UniPoly(c * other for c in self.coeffs)
        other = _as_unipoly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if _is_scalar(other) or isinstance(other, ParamPoly):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly(fn(c) for c in self.coeffs)

    def specialize(self, e1, e2) -> "UniPoly":
        return self.map_coeffs(lambda c: poly_eval(c, e1, e2))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division. Over ParamPoly coefficients the divisor must be monic."""
        other = _as_unipoly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lc = other.leading()
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + other.degree]
            if c == 0:
                continue
            q = c if lc == 1 else c / lc
            quot[k] = q
            for j, d in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * d
        return UniPoly(quot), UniPoly(rem[: other.degree] if other.degree > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        lc = self.leading()
        if lc == 1 or self.is_zero():
            return self
        return UniPoly(c / lc for c in self.coeffs)

    def to_json(self) -> list:
        return [c.to_json() if isinstance(c, ParamPoly) else format_rational(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            cs = str(c)
            if isinstance(c, ParamPoly) and len(c.terms) > 1:
                cs = f"({cs})"
            if mono and c == 1:
                parts.append(mono)
            elif mono:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self})"


def _as_unipoly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly([x])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (Euclid)."""
    if not (a.has_field_coefficients() and b.has_field_coefficients()):
        raise TypeError("gcd is only available for rational coefficients")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a
