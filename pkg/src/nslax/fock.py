"""Graded components F[w]_n of C[w, V1, V2, ...] and the extended Hall inner product.

A basis element ``V_mu w^l`` is indexed by ``(mu, l)`` with ``|mu| + l = n``.
Vectors are either *specialized* (Fraction coefficients, with the point
``(e1, e2)`` recorded) or *symbolic* (ParamPoly coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from nslax.errors import DimensionMismatchError, ModeMismatchError
from nslax.exactalg import ParamPoly, format_rational, parse_rational, poly_eval
from nslax.partitions import Partition, enumerate_partitions

BasisIndex = tuple[Partition, int]

SPECIALIZED = "specialized"
SYMBOLIC = "symbolic"


def ebar(eps):
    """e1 + e2, as a Fraction at a point or a ParamPoly when ``eps`` is None."""
    if eps is None:
        return ParamPoly.linear(1, 1)
    return Fraction(eps[0]) + Fraction(eps[1])


def hbar(eps):
    """-e1 * e2."""
    if eps is None:
        return ParamPoly({(1, 1): -1})
    return -Fraction(eps[0]) * Fraction(eps[1])


def normalize_eps(eps):
    if eps is None:
        return None
    e1, e2 = eps
    return (parse_rational(e1), parse_rational(e2))


@lru_cache(maxsize=None)
def _basis(n: int) -> tuple[BasisIndex, ...]:
    return tuple((mu, l) for l in range(n + 1) for mu in enumerate_partitions(n - l))


def basis(n: int) -> list[BasisIndex]:
    """Basis of F[w]_n ordered by l ascending, then partitions in reverse lex order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return list(_basis(n))


@lru_cache(maxsize=None)
def basis_position(n: int) -> dict[BasisIndex, int]:
    return {idx: i for i, idx in enumerate(_basis(n))}


def dimension(n: int) -> int:
    return len(_basis(n))


def norm_sq(idx: BasisIndex, eps=None):
    """``prod_k (hbar k)^{d_k} d_k!`` for mu = (1^{d_1} 2^{d_2} ...); independent of l."""
    mu, _ = idx
    h = hbar(eps)
    out = Fraction(1) if eps is not None else ParamPoly.const(1)
    for k, d in Partition(mu).multiplicities().items():
        out = out * (h * k) ** d * factorial(d)
    return out


class FockVector:
    """Finite linear combination of basis elements of F[w]_n."""

    __slots__ = ("n", "eps", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[BasisIndex, object] | None = None, eps=None):
        self.n = n
        self.eps = normalize_eps(eps)
        clean = {}
        for (mu, l), c in (coeffs or {}).items():
            mu = Partition(mu)
            if mu.size + l != n:
                raise DimensionMismatchError(f"index ({mu}, {l}) does not have degree {n}")
            if self.eps is None:
                if not isinstance(c, ParamPoly):
                    c = ParamPoly.const(c)
            else:
                if isinstance(c, ParamPoly):
                    raise ModeMismatchError("ParamPoly coefficient in a specialized vector")
                c = Fraction(c)
            if c != 0:
                clean[(mu, l)] = c
        self.coeffs = clean

    @property
    def mode(self) -> str:
        return SYMBOLIC if self.eps is None else SPECIALIZED

    @classmethod
    def basis_vector(cls, mu, l: int = 0, eps=None) -> "FockVector":
        mu = Partition(mu)
        return cls(mu.size + l, {(mu, l): 1}, eps)

    @classmethod
    def from_dense(cls, n: int, values, eps=None) -> "FockVector":
        return cls(n, dict(zip(_basis(n), values)), eps)

    def to_dense(self) -> list:
        zero = Fraction(0) if self.eps is not None else ParamPoly()
        return [self.coeffs.get(idx, zero) for idx in _basis(self.n)]

    def coeff(self, mu, l: int = 0):
        c = self.coeffs.get((Partition(mu), l))
        if c is None:
            return Fraction(0) if self.eps is not None else ParamPoly()
        return c

    def _check(self, other: "FockVector"):
        if not isinstance(other, FockVector):
            raise TypeError(f"expected FockVector, got {type(other).__name__}")
        if self.n != other.n:
            raise DimensionMismatchError(f"degree {self.n} vs {other.n}")
        if self.eps != other.eps:
            raise ModeMismatchError(f"vectors at different parameters: {self.eps} vs {other.eps}")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return FockVector(self.n, out, self.eps)

    def __neg__(self):
        return FockVector(self.n, {k: -c for k, c in self.coeffs.items()}, self.eps)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c) -> "FockVector":
        if self.eps is not None and isinstance(c, ParamPoly):
            raise ModeMismatchError("ParamPoly scalar on a specialized vector")
        return FockVector(self.n, {k: v * c for k, v in self.coeffs.items()}, self.eps)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.n == other.n and self.eps == other.eps and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.eps, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def specialize(self, e1, e2) -> "FockVector":
        if self.eps is not None:
            raise ModeMismatchError("vector is already specialized")
        return FockVector(self.n, {k: poly_eval(c, e1, e2) for k, c in self.coeffs.items()}, (e1, e2))

    def swap_eps(self) -> "FockVector":
        """Exchange e1 and e2 in a symbolic vector."""
        if self.eps is not None:
            raise ModeMismatchError("swap_eps needs a symbolic vector")
        return FockVector(self.n, {k: c.swap() for k, c in self.coeffs.items()})

    def times_v(self, k: int) -> "FockVector":
        """Multiply by V_k (raises the degree by k)."""
        return FockVector(
            self.n + k, {(Partition(sorted(mu + (k,), reverse=True)), l): c for (mu, l), c in self.coeffs.items()}, self.eps
        )

    def to_json(self) -> dict:
        pos = basis_position(self.n)
        terms = []
        for idx in sorted(self.coeffs, key=pos.__getitem__):
            c = self.coeffs[idx]
            terms.append(
                {
                    "mu": list(idx[0]),
                    "l": idx[1],
                    "coeff": c.to_json() if isinstance(c, ParamPoly) else format_rational(c),
                }
            )
        out = {"n": self.n, "mode": self.mode}
        if self.eps is not None:
            out["eps"] = [format_rational(self.eps[0]), format_rational(self.eps[1])]
        out["terms"] = terms
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "FockVector":
        eps = None
        if data["mode"] == SPECIALIZED:
            eps = tuple(parse_rational(x) for x in data["eps"])
        coeffs = {}
        for t in data["terms"]:
            c = t["coeff"]
            c = ParamPoly.from_json(c) if eps is None else parse_rational(c)
            coeffs[(Partition(t["mu"]), int(t["l"]))] = c
        return cls(int(data["n"]), coeffs, eps)

    def __str__(self):
        if not self.coeffs:
            return "0"
        pos = basis_position(self.n)
        parts = []
        for idx in sorted(self.coeffs, key=pos.__getitem__):
            c = self.coeffs[idx]
            mono = monomial_str(*idx)
            cs = str(c)
            if isinstance(c, ParamPoly) and len(c.terms) > 1:
                cs = f"({cs})"
            if mono == "1":
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FockVector(n={self.n}, {self})"


def monomial_str(mu, l: int) -> str:
    pieces = []
    for k, d in sorted(Partition(mu).multiplicities().items()):
        pieces.append(f"V{k}" if d == 1 else f"V{k}^{d}")
    if l:
        pieces.append("w" if l == 1 else f"w^{l}")
    return "*".join(pieces) if pieces else "1"


@dataclass(frozen=True)
class InnerProduct:
    """Extended Hall inner product on F[w]_n (bilinear; no conjugation on real data)."""

    n: int
    eps: tuple | None = None

    def norm_sq(self, idx: BasisIndex):
        return norm_sq(idx, self.eps)

    def gram_diagonal(self) -> list:
        return [norm_sq(idx, self.eps) for idx in _basis(self.n)]

    def __call__(self, x: FockVector, y: FockVector):
        return inner(x, y)


def inner(x: FockVector, y: FockVector):
    """Sum over shared indices of x * y * ||V_mu w^l||^2."""
    x._check(y)
    total = Fraction(0) if x.eps is not None else ParamPoly()
    small, big = (x, y) if len(x.coeffs) <= len(y.coeffs) else (y, x)
    for idx, c in small.coeffs.items():
        d = big.coeffs.get(idx)
        if d is not None:
            total = total + c * d * norm_sq(idx, x.eps)
    return total


def pi_l(x: FockVector, l: int) -> dict[Partition, object]:
    """Coefficients of w^l, as a map from partitions of n - l."""
    return {mu: c for (mu, ll), c in x.coeffs.items() if ll == l}


def pi_l_vector(x: FockVector, l: int) -> FockVector:
    """The w^l slice as a vector of F[w]_{n-l} (supported on l = 0)."""
    return FockVector(x.n - l, {(mu, 0): c for mu, c in pi_l(x, l).items()}, x.eps)


def pi_0(x: FockVector) -> FockVector:
    """Evaluation at w = 0, kept inside F[w]_n."""
    return FockVector(x.n, {(mu, 0): c for (mu, l), c in x.coeffs.items() if l == 0}, x.eps)


def reassemble(slices: Mapping[int, Mapping[Partition, object]], n: int, eps=None) -> FockVector:
    """Inverse of taking all pi_l slices."""
    return FockVector(n, {(mu, l): c for l, sl in slices.items() for mu, c in sl.items()}, eps)


def principal_specialize(x: FockVector, w_val, z, e1=None, e2=None) -> Fraction:
    """Set every V_k to z and w to w_val (after specializing e1, e2 if symbolic)."""
    w_val, z = Fraction(w_val), Fraction(z)
    if x.eps is None:
        if e1 is None or e2 is None:
            raise ModeMismatchError("symbolic vector needs (e1, e2) to specialize")
        x = x.specialize(e1, e2)
    elif e1 is not None and (Fraction(e1), Fraction(e2)) != x.eps:
        raise ModeMismatchError(f"vector specialized at {x.eps}, asked for ({e1}, {e2})")
    total = Fraction(0)
    for (mu, l), c in x.coeffs.items():
        total += c * z ** len(mu) * w_val**l
    return total


def combine(terms: Iterable[tuple[object, FockVector]]) -> FockVector:
    terms = list(terms)
    out = terms[0][1].scale(terms[0][0])
    for c, v in terms[1:]:
        out = out + v.scale(c)
    return out
