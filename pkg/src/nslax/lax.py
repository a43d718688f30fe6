"""The Lax operator on F[w]_n, its transfer operator and the cubic Hamiltonian.

On ``V_mu w^l`` the operator is the sum of three pieces:

* ``sum_{k=1}^{l} V_k V_mu w^{l-k}`` (multiplication, truncated at w^0),
* ``sum_k hbar k d_k V_{mu - k} w^{l+k}`` (the derivations V_{-k} = hbar k d/dV_k),
* ``ebar * l * V_mu w^l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from nslax.errors import ModeMismatchError, ResolventPoleError, SingularMatrixError
from nslax.exactalg import ExactMatrix, format_rational, solve_many
from nslax.fock import (
    BasisIndex,
    FockVector,
    basis,
    basis_position,
    ebar,
    hbar,
    norm_sq,
    normalize_eps,
)
from nslax.partitions import Partition, enumerate_partitions

DEFAULT_U0 = Fraction(10**4) + Fraction(1, 7)


def _add_part(mu: Partition, k: int) -> Partition:
    return Partition(sorted(mu + (k,), reverse=True))


def _remove_part(mu: Partition, k: int) -> Partition:
    parts = list(mu)
    parts.remove(k)
    return Partition(parts)


def _lax_on_index(idx: BasisIndex, eb, hb) -> list[tuple[BasisIndex, object]]:
    mu, l = idx
    out = []
    for k in range(1, l + 1):
        out.append(((_add_part(mu, k), l - k), 1))
    for k, d in mu.multiplicities().items():
        out.append(((_remove_part(mu, k), l + k), hb * (k * d)))
    if l:
        out.append(((mu, l), eb * l))
    return out


def apply_lax(x: FockVector) -> FockVector:
    """Apply the Lax operator to a vector of F[w]_n (degree is preserved)."""
    eb, hb = ebar(x.eps), hbar(x.eps)
    out: dict = {}
    for idx, c in x.coeffs.items():
        for tgt, f in _lax_on_index(idx, eb, hb):
            v = c * f
            out[tgt] = out[tgt] + v if tgt in out else v
    y = FockVector(x.n, out, x.eps)
    assert y.n == x.n
    return y


@dataclass(frozen=True)
class LaxMatrix:
    n: int
    eps: tuple | None
    matrix: ExactMatrix

    @property
    def basis(self) -> list[BasisIndex]:
        return basis(self.n)

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def apply_dense(self, v):
        return self.matrix @ v

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "mode": "symbolic" if self.eps is None else "specialized",
            "basis": [{"mu": list(mu), "l": l} for mu, l in self.basis],
        }
        if self.eps is None:
            out["rows"] = [[x.to_json() if hasattr(x, "to_json") else format_rational(Fraction(x)) for x in r] for r in self.matrix.rows]
        else:
            out["eps"] = [format_rational(e) for e in self.eps]
            out["rows"] = [[format_rational(Fraction(x)) for x in r] for r in self.matrix.rows]
        return out


@lru_cache(maxsize=64)
def _lax_matrix(n: int, eps) -> LaxMatrix:
    eb, hb = ebar(eps), hbar(eps)
    pos = basis_position(n)
    dim = len(pos)
    zero = Fraction(0) if eps is not None else 0
    cols = []
    for idx in basis(n):
        col = [zero] * dim
        for tgt, f in _lax_on_index(idx, eb, hb):
            col[pos[tgt]] = col[pos[tgt]] + f
        cols.append(col)
    return LaxMatrix(n, eps, ExactMatrix.from_columns(cols) if cols else ExactMatrix([]))


def lax_matrix(n: int, eps=None) -> LaxMatrix:
    """Matrix of the Lax operator on F[w]_n in the fock.basis order (columns are images)."""
    return _lax_matrix(n, normalize_eps(eps))


def check_self_adjoint(M: LaxMatrix | ExactMatrix, eps=None, n: int | None = None) -> bool:
    """``G M == M^T G`` with G the diagonal Gram matrix of the extended Hall product."""
    if isinstance(M, LaxMatrix):
        eps, n, mat = M.eps, M.n, M.matrix
    else:
        mat = M
        eps = normalize_eps(eps)
    if eps is None:
        raise ModeMismatchError("self-adjointness is checked at a specialization")
    g = [norm_sq(idx, eps) for idx in basis(n)]
    dim = len(g)
    for i in range(dim):
        for j in range(dim):
            if g[i] * mat[i, j] != mat[j, i] * g[j]:
                return False
    return True


@dataclass(frozen=True)
class TransferMatrix:
    """pi_0 (u0 - L)^{-1} restricted to F_n, in the partition basis of F_n."""

    n: int
    u0: Fraction
    eps: tuple
    matrix: ExactMatrix

    @property
    def partitions(self) -> list[Partition]:
        return enumerate_partitions(self.n)


def transfer_matrix(n: int, u0=DEFAULT_U0, eps=None) -> TransferMatrix:
    """Columns are pi_0 of the solutions of (u0 - L) x = V_mu, |mu| = n.

    u0 in the spectrum of L is detected exactly (the elimination finds no
    pivot) and raised as ResolventPoleError.
    """
    eps = normalize_eps(eps)
    if eps is None:
        raise ModeMismatchError("transfer_matrix needs a specialization (e1, e2)")
    u0 = Fraction(u0)
    L = lax_matrix(n, eps).matrix
    A = (-L).shift(-u0)
    pos = basis_position(n)
    mus = enumerate_partitions(n)
    dim = A.nrows
    rhs = []
    for mu in mus:
        b = [Fraction(0)] * dim
        b[pos[(mu, 0)]] = Fraction(1)
        rhs.append(b)
    try:
        sols = solve_many(A, rhs)
    except SingularMatrixError as exc:
        raise ResolventPoleError(f"u0 = {u0} is an eigenvalue of L on F[w]_{n}") from exc
    rows_f = [pos[(mu, 0)] for mu in mus]
    cols = [[x[i] for i in rows_f] for x in sols]
    return TransferMatrix(n, u0, eps, ExactMatrix.from_columns(cols))


def hierarchy_matrix(n: int, power: int, eps=None) -> ExactMatrix:
    """pi_0 L^power restricted to F_n, computed from lax_matrix."""
    eps = normalize_eps(eps)
    L = lax_matrix(n, eps).matrix
    pos = basis_position(n)
    idx = [pos[(mu, 0)] for mu in enumerate_partitions(n)]
    cols = []
    for j in idx:
        v = [Fraction(0) if eps is not None else 0] * L.nrows
        v[j] = 1
        for _ in range(power):
            v = L @ v
        cols.append([v[i] for i in idx])
    return ExactMatrix.from_columns(cols)


def cut_and_join(n: int, eps=None) -> ExactMatrix:
    """The cubic Hamiltonian on F_n from its normal-ordered three-term formula.

    Terms: ``sum V_{k1} V_{k2} V_{-(k1+k2)}``, ``sum V_{k1+k2} V_{-k1} V_{-k2}``
    and ``ebar * sum_k k V_k V_{-k}``, with ``V_{-k} = hbar k d/dV_k``.
    """
    eps = normalize_eps(eps)
    eb, hb = ebar(eps), hbar(eps)
    mus = enumerate_partitions(n)
    pos = {mu: i for i, mu in enumerate(mus)}
    zero = Fraction(0) if eps is not None else 0
    cols = []
    for mu in mus:
        col = [zero] * len(mus)
        mult = mu.multiplicities()
        # join: V_{-(k1+k2)} removes a part m = k1 + k2, then V_{k1} V_{k2}
        for m, d in mult.items():
            rest = _remove_part(mu, m)
            for k1 in range(1, m):
                tgt = _add_part(_add_part(rest, k1), m - k1)
                col[pos[tgt]] = col[pos[tgt]] + hb * (m * d)
        # cut: V_{-k1} V_{-k2} remove parts k1, k2, then V_{k1+k2}
        for k2, d2 in mult.items():
            rest = _remove_part(mu, k2)
            for k1, d1 in rest.multiplicities().items():
                tgt = _add_part(_remove_part(rest, k1), k1 + k2)
                col[pos[tgt]] = col[pos[tgt]] + hb * hb * (k1 * k2 * d1 * d2)
        # diagonal: ebar * sum_k k * hbar * k * d_k
        diag = sum(k * k * d for k, d in mult.items())
        if diag:
            col[pos[mu]] = col[pos[mu]] + eb * hb * diag
        cols.append(col)
    return ExactMatrix.from_columns(cols) if cols else ExactMatrix([])
