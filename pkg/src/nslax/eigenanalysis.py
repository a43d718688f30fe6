"""Symbolic eigenfunctions, integrality evidence, symmetry and principal specializations.

The symbolic coefficients are recovered by running the spectral pipeline at
the points (e1, e2) = (k, -1), k = 1, 2, ..., and fitting a homogeneous
polynomial of degree n - len(mu) to each coefficient of V_mu w^l. At e2 = -1
the addable contents c*k - r of one diagram never coincide, so no sample point
is ever skipped for content collisions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from nslax.cache import write_json_atomic
from nslax.errors import DegenerateParameterError, NonHomogeneousError
from nslax.exactalg import ParamPoly, RationalFunction, UniPoly, char_poly, interpolate_homogeneous
from nslax.fock import FockVector, basis, pi_0, principal_specialize
from nslax.jack import SAMPLE_E2, jack_characters, stanley_value
from nslax.partitions import (
    Cell,
    Partition,
    conjugate,
    content,
    content_value,
    corners,
    enumerate_partitions,
    reflect,
    t_lambda,
)
from nslax.report import Report
from nslax.spectral import arrival_identity, build_cyclic, eigenfunctions


@dataclass(frozen=True)
class PsiExpansion:
    lam: Partition
    s: Cell
    coeffs: dict  # (mu, l) -> ParamPoly

    @property
    def n(self) -> int:
        return self.lam.size

    def vector(self) -> FockVector:
        return FockVector(self.n, self.coeffs)

    def __getitem__(self, key) -> ParamPoly:
        mu, l = key
        return self.coeffs.get((Partition(mu), l), ParamPoly())

    def slice(self, l: int) -> dict:
        return {mu: c for (mu, ll), c in self.coeffs.items() if ll == l}

    def to_json(self) -> dict:
        v = self.vector().to_json()
        return {"lambda": list(self.lam), "cell": list(self.s), "n": self.n, "terms": v["terms"]}

    @classmethod
    def from_json(cls, data) -> "PsiExpansion":
        coeffs = {(Partition(t["mu"]), int(t["l"])): ParamPoly.from_json(t["coeff"]) for t in data["terms"]}
        return cls(Partition(data["lambda"]), tuple(data["cell"]), coeffs)

    def __str__(self):
        return str(self.vector())


def _sample_systems(n: int, count: int):
    """Eigen systems for every |lambda| = n at `count` sample points."""
    out = []
    k = 1
    while len(out) < count:
        if k > count + 50:
            raise DegenerateParameterError("could not find enough nondegenerate sample points")
        try:
            point = {lam: eigenfunctions(build_cyclic(lam, k, SAMPLE_E2)) for lam in enumerate_partitions(n)}
            out.append((Fraction(k), point))
        except DegenerateParameterError:
            pass
        k += 1
    return out


@lru_cache(maxsize=32)
def symbolic_psi_table(n: int) -> dict:
    """PsiExpansion for every (lambda, s) with |lambda| = n, keyed by (lambda, s)."""
    samples = _sample_systems(n, n + 2)
    out = {}
    for lam in enumerate_partitions(n):
        for s in corners(lam).addable:
            coeffs = {}
            for mu, l in basis(n):
                pts = [(e1, sys[lam][s].coeff(mu, l)) for e1, sys in samples]
                try:
                    p = interpolate_homogeneous(pts, n - len(mu), e2=SAMPLE_E2)
                except NonHomogeneousError as exc:
                    raise DegenerateParameterError(
                        f"coefficient of ({mu}, {l}) in psi_{lam}^{s} did not fit a homogeneous polynomial: {exc}"
                    ) from exc
                if not p.is_zero():
                    coeffs[(mu, l)] = p
            out[(lam, s)] = PsiExpansion(lam, s, coeffs)
    return out


def symbolic_psi(lam, s) -> PsiExpansion:
    lam, s = Partition(lam), tuple(s)
    if s not in corners(lam).addable:
        raise ValueError(f"{s} is not an addable corner of {lam}")
    return symbolic_psi_table(lam.size)[(lam, s)]


def check_integrality(P: PsiExpansion) -> bool:
    return all(c.has_integer_coefficients() for c in P.coeffs.values())


def integrality_witness(P: PsiExpansion):
    """First coefficient with a non-integer term, or None."""
    for (mu, l), c in sorted(P.coeffs.items(), key=lambda t: (t[0][1], t[0][0])):
        if not c.has_integer_coefficients():
            return {"mu": list(mu), "l": l, "coeff": c.to_json()}
    return None


def sign_pattern(P: PsiExpansion) -> dict:
    """Counts of coefficients whose terms are all positive, all negative, or mixed."""
    counts = {"positive": 0, "negative": 0, "mixed": 0}
    for c in P.coeffs.values():
        signs = {v > 0 for _, v in c.items()}
        key = "mixed" if len(signs) > 1 else ("positive" if True in signs else "negative")
        counts[key] += 1
    return counts


def integrality_ledger(max_degree: int, path: str | Path | None = None) -> tuple[bool, list[dict]]:
    """Run the integrality check for all |lambda| <= max_degree; optionally write the evidence ledger."""
    entries = []
    for n in range(max_degree + 1):
        for (lam, s), P in symbolic_psi_table(n).items():
            ok = check_integrality(P)
            entries.append(
                {
                    "n": n,
                    "lambda": list(lam),
                    "cell": list(s),
                    "pass": ok,
                    "witness": integrality_witness(P),
                    "signs": sign_pattern(P),
                }
            )
    if path is not None:
        write_json_atomic(path, {"max_degree": max_degree, "entries": entries})
    return all(e["pass"] for e in entries), entries


def check_symmetry(lam, s) -> bool:
    """psi_lambda^s with e1, e2 exchanged equals psi_{lambda'}^{s'}."""
    a = symbolic_psi(lam, s).vector().swap_eps()
    b = symbolic_psi(conjugate(Partition(lam)), reflect(tuple(s))).vector()
    return a == b


def grown_cells(lam, s) -> list[Cell]:
    """Cells of lambda + s other than (0, 0)."""
    return [t for t in Partition(lam).add_cell(s).cells() if t != (0, 0)]


def top_coefficient_formula(lam, s) -> ParamPoly:
    out = ParamPoly.const(1)
    for t in grown_cells(lam, s):
        out = out * content(t)
    return out


def check_top_coefficient(P: PsiExpansion) -> bool:
    return P[((), P.n)] == top_coefficient_formula(P.lam, P.s)


def check_principal(lam, s, z_samples, e1, e2) -> Report:
    """Content-product values of psi at w = 0 and w = 1 with every V_k = z."""
    lam, s = Partition(lam), tuple(s)
    rep = Report(f"principal specializations of psi_{lam}^{s} at ({e1}, {e2})")
    E = eigenfunctions(build_cyclic(lam, e1, e2))
    p = E[s]
    sig = E.eigenvalues[s]
    grown = grown_cells(lam, s)
    for z in z_samples:
        z = Fraction(z)
        at0 = principal_specialize(p, 0, z)
        at1 = principal_specialize(p, 1, z)
        want0 = stanley_value(lam, z, e1, e2)
        want1 = Fraction(1)
        for t in grown:
            want1 *= z + content_value(t, e1, e2)
        rep.add(f"w=0 z={z}", at0 == want0, f"{at0} vs {want0}")
        rep.add(f"w=1 z={z}", at1 == want1, f"{at1} vs {want1}")
        if z != 0:
            jz = principal_specialize(pi_0(p), 0, z)
            rep.add(f"w=1 via j z={z}", at1 == (1 + sig / z) * jz)
    top = p.coeff((), lam.size)
    want = Fraction(1)
    for t in grown:
        want *= content_value(t, e1, e2)
    rep.add("top coefficient", top == want, f"{top} vs {want}")
    rep.add("arrival identity", arrival_identity(E, s))
    return rep


def _interpolate_monic(polys: list[tuple[Fraction, UniPoly]], deg: int) -> UniPoly:
    """Monic polynomial in u whose u^(deg-k) coefficient is homogeneous of degree k in (e1, e2)."""
    coeffs = []
    for k in range(deg + 1):
        pts = [(e1, q.coeff(deg - k)) for e1, q in polys]
        coeffs.append(interpolate_homogeneous(pts, k, e2=SAMPLE_E2))
    return UniPoly(list(reversed(coeffs)))


@lru_cache(maxsize=256)
def symbolic_titchmarsh_weyl(lam) -> RationalFunction:
    """det(u - L~)/det(u - L) on Z_lambda with symbolic coefficients, by interpolation."""
    lam = Partition(lam)
    m = len(corners(lam).addable)
    P, Q = [], []
    for k in range(1, m + 3):
        Z = build_cyclic(lam, k, SAMPLE_E2)
        P.append((Fraction(k), char_poly(Z.compressed_L)))
        Q.append((Fraction(k), char_poly(Z.compressed_Ltilde) if m > 1 else UniPoly([1])))
    return RationalFunction(_interpolate_monic(Q, m - 1), _interpolate_monic(P, m))


def check_t_bridge(lam) -> bool:
    """Symbolic determinant ratio equals the corner product, numerator and denominator alike."""
    T = symbolic_titchmarsh_weyl(lam)
    ref = t_lambda(lam)
    return T.num == ref.num and T.den == ref.den


def check_jack_slice(P: PsiExpansion) -> bool:
    """The w^0 slice of psi equals the symbolic Jack polynomial."""
    table = jack_characters(P.n)
    return P.slice(0) == table.row(P.lam)
