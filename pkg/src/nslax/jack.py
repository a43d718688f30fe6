"""Jack polynomials as eigenvectors of the transfer operator.

For each |lambda| = n the matrix of pi_0 (u0 - L)^{-1} on F_n has the simple
eigenvalue T_lambda(u0); its eigenvector, scaled so that the V_1^n
coefficient is 1, is j_lambda.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from nslax.errors import DegenerateParameterError, NonHomogeneousError, TheoremViolationError
from nslax.exactalg import ParamPoly, interpolate_homogeneous, kernel_basis
from nslax.fock import FockVector, inner, normalize_eps, principal_specialize
from nslax.lax import DEFAULT_U0, cut_and_join, transfer_matrix
from nslax.partitions import Partition, conjugate, enumerate_partitions, t_lambda, t_lambda_at
from nslax.report import Report

MAX_U0_RETRIES = 5

# interpolation samples e1 = 1, 2, ... with e2 fixed here (alpha = e1 > 0, hbar > 0)
SAMPLE_E2 = Fraction(-1)


@dataclass(frozen=True)
class JackTable:
    n: int
    eps: tuple
    u0: Fraction
    jacks: dict

    def __getitem__(self, lam) -> FockVector:
        return self.jacks[Partition(lam)]

    def __iter__(self):
        return iter(self.jacks)

    def items(self):
        return self.jacks.items()


@lru_cache(maxsize=128)
def _compute_jacks(n: int, eps: tuple, u0: Fraction) -> JackTable:
    e1, e2 = eps
    lams = enumerate_partitions(n)
    for attempt in range(MAX_U0_RETRIES + 1):
        try:
            vals = {lam: t_lambda_at(lam, u0, e1, e2) for lam in lams}
        except ZeroDivisionError:
            vals = None
        if vals is not None and len(set(vals.values())) == len(lams):
            break
        u0 += 1
    else:
        raise DegenerateParameterError(
            f"transfer eigenvalues collide at (e1, e2) = ({e1}, {e2}) for every tried u0"
        )
    tm = transfer_matrix(n, u0, eps)
    ones = len(lams) - 1  # (1^n) is last in reverse lex order
    jacks = {}
    for lam in lams:
        ker = kernel_basis(tm.matrix.shift(vals[lam]))
        if len(ker) != 1:
            raise DegenerateParameterError(
                f"eigenspace of T({u0}) for {lam} has dimension {len(ker)} at ({e1}, {e2})"
            )
        v = ker[0]
        if v[ones] == 0:
            raise DegenerateParameterError(f"j_{lam} has zero V_1^n coefficient at ({e1}, {e2})")
        scale = 1 / v[ones]
        jacks[lam] = FockVector(n, {(mu, 0): c * scale for mu, c in zip(lams, v)}, eps)
    return JackTable(n, eps, u0, jacks)


def compute_jacks(n: int, e1, e2, u0=DEFAULT_U0) -> JackTable:
    """All j_lambda with |lambda| = n at the point (e1, e2)."""
    eps = normalize_eps((e1, e2))
    return _compute_jacks(n, eps, Fraction(u0))


def sample_points(count: int, start: int = 1) -> list[tuple[Fraction, Fraction]]:
    return [(Fraction(k), SAMPLE_E2) for k in range(start, start + count)]


@dataclass(frozen=True)
class JackCharacterTable:
    n: int
    chars: dict  # (lam, mu) -> ParamPoly

    def __getitem__(self, key) -> ParamPoly:
        lam, mu = key
        return self.chars.get((Partition(lam), Partition(mu)), ParamPoly())

    def row(self, lam) -> dict:
        lam = Partition(lam)
        return {mu: c for (l, mu), c in self.chars.items() if l == lam}

    def jack(self, lam) -> FockVector:
        """Symbolic j_lambda."""
        return FockVector(self.n, {(mu, 0): c for mu, c in self.row(lam).items()})

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "characters": [
                {"lambda": list(lam), "mu": list(mu), "chi": c.to_json()}
                for (lam, mu), c in sorted(self.chars.items(), key=lambda t: (_rank(t[0][0]), _rank(t[0][1])))
            ],
        }

    @classmethod
    def from_json(cls, data) -> "JackCharacterTable":
        chars = {
            (Partition(t["lambda"]), Partition(t["mu"])): ParamPoly.from_json(t["chi"]) for t in data["characters"]
        }
        return cls(int(data["n"]), chars)


def _rank(p: Partition) -> tuple:
    return (-p.size, tuple(-x for x in p))


def _sample_tables(n: int, count: int):
    """Jack tables at `count` nondegenerate sample points, skipping failures."""
    out = []
    k = 1
    while len(out) < count:
        if k > count + 50:
            raise DegenerateParameterError("could not find enough nondegenerate sample points")
        try:
            out.append(compute_jacks(n, k, SAMPLE_E2))
        except DegenerateParameterError:
            pass
        k += 1
    return out


@lru_cache(maxsize=32)
def jack_characters(n: int) -> JackCharacterTable:
    """Symbolic Jack characters by homogeneous interpolation in (e1, e2).

    One more sample than the top degree is used, so every fit is also a
    consistency check. All coefficients must be integers.
    """
    tables = _sample_tables(n, n + 2)
    chars = {}
    lams = enumerate_partitions(n)
    for lam in lams:
        for mu in lams:
            samples = [(t.eps[0], t[lam].coeff(mu, 0)) for t in tables]
            try:
                p = interpolate_homogeneous(samples, n - len(mu), e2=SAMPLE_E2)
            except NonHomogeneousError as exc:
                raise TheoremViolationError(f"chi_{lam},{mu} is not homogeneous: {exc}") from exc
            if not p.has_integer_coefficients():
                raise TheoremViolationError(f"chi_{lam},{mu} = {p} has non-integer coefficients")
            if not p.is_zero():
                chars[(lam, mu)] = p
    return JackCharacterTable(n, chars)


def validate_jacks(table: JackTable) -> Report:
    """Orthogonality, cubic-Hamiltonian eigenvalues, and the e1 <-> e2 / conjugation symmetry."""
    n, eps = table.n, table.eps
    e1, e2 = eps
    rep = Report(f"jacks n={n} at ({e1}, {e2})")
    lams = list(table)
    for i, a in enumerate(lams):
        for b in lams[i + 1 :]:
            ip = inner(table[a], table[b])
            rep.add(f"orthogonal {a} {b}", ip == 0, f"<j,j'> = {ip}")
    H = cut_and_join(n, eps)
    for lam in lams:
        v = table[lam].to_dense()[: len(lams)]
        Hv = H @ v
        ev = t_lambda(lam).specialize(e1, e2).series_at_infinity(4)[4]
        rep.add(f"T3 eigenvalue {lam}", all(x == ev * y for x, y in zip(Hv, v)), f"expected {ev}")
    swapped = compute_jacks(n, e2, e1)
    for lam in lams:
        a = table[lam].coeffs
        b = swapped[conjugate(lam)].coeffs
        rep.add(f"symmetry {lam}", a == b)
    return rep


def stanley_value(lam: Partition, z, e1, e2) -> Fraction:
    """prod over cells t of lambda of (z + [t])."""
    val = Fraction(1)
    for c, r in Partition(lam).cells():
        val *= Fraction(z) + c * Fraction(e1) + r * Fraction(e2)
    return val


def check_stanley(table: JackTable, zs) -> Report:
    e1, e2 = table.eps
    rep = Report(f"principal specialization of jacks n={table.n}")
    for lam, j in table.items():
        for z in zs:
            got = principal_specialize(j, 0, z)
            want = stanley_value(lam, z, e1, e2)
            rep.add(f"{lam} z={z}", got == want, f"{got} vs {want}")
    return rep
