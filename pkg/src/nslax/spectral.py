"""Jack-Lax cyclic spaces, the eigenfunctions psi_lambda^s, and Titchmarsh-Weyl data.

Everything here runs at a rational point (e1, e2). Z_lambda is spanned by
j, Lj, L^2 j, ...; we keep a square-root-free orthogonal basis b_0 = j,
b_1, ..., b_m of it and do all further linear algebra in those coordinates.
In that basis Pi_J is "keep coordinate 0", the complement of C*J is spanned
by b_1..b_m, and the compression of L to it is the lower-right block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from nslax.errors import DegenerateParameterError, SingularMatrixError, TheoremViolationError
from nslax.exactalg import ExactMatrix, RationalFunction, UniPoly, char_poly, kernel_basis, rank, solve_linear
from nslax.fock import FockVector, basis, dimension, norm_sq, normalize_eps, pi_0, pi_l
from nslax.jack import compute_jacks
from nslax.lax import lax_matrix
from nslax.partitions import (
    Partition,
    content_value,
    corners,
    enumerate_partitions,
    t_lambda,
    transition_weights_at,
)
from nslax.report import Report


def _gram(n: int, eps) -> list[Fraction]:
    return [norm_sq(idx, eps) for idx in basis(n)]


def _dot(x, y, g) -> Fraction:
    return sum((a * b * w for a, b, w in zip(x, y, g) if a and b), Fraction(0))


@dataclass(frozen=True)
class CyclicSpace:
    """Z_lambda with an orthogonal basis and the compressions of L."""

    lam: Partition
    eps: tuple
    jack: FockVector
    basis_vectors: tuple  # dense vectors b_0 = J, b_1, ..., b_m over fock.basis(n)
    norms: tuple  # <b_i, b_i>
    compressed_L: ExactMatrix  # L in the b-coordinates
    addable: tuple
    outer: tuple

    @property
    def n(self) -> int:
        return self.lam.size

    @property
    def dim(self) -> int:
        return len(self.basis_vectors)

    @property
    def a(self) -> Fraction:
        """Coefficient of J in LJ."""
        return self.compressed_L[0, 0]

    @property
    def compressed_Ltilde(self) -> ExactMatrix:
        m = self.dim
        return self.compressed_L.submatrix(range(1, m), range(1, m))

    @property
    def Jtilde_coords(self) -> list[Fraction]:
        """LJ - aJ in the coordinates b_1..b_m."""
        return [self.compressed_L[i, 0] for i in range(1, self.dim)]

    @property
    def J(self) -> FockVector:
        return self.jack

    @property
    def Jtilde(self) -> FockVector:
        return self.lift([Fraction(0)] + self.Jtilde_coords)

    def lift(self, coords) -> FockVector:
        """Vector of F[w]_n with the given b-coordinates."""
        out = [Fraction(0)] * len(self.basis_vectors[0])
        for c, b in zip(coords, self.basis_vectors):
            if c:
                out = [x + c * y for x, y in zip(out, b)]
        return FockVector.from_dense(self.n, out, self.eps)

    def coord_inner(self, x, y) -> Fraction:
        return sum((a * b * g for a, b, g in zip(x, y, self.norms)), Fraction(0))

    def krylov(self) -> list[FockVector]:
        """j, Lj, ..., L^{dim-1} j."""
        L = lax_matrix(self.n, self.eps).matrix
        v = self.jack.to_dense()
        out = []
        for _ in range(self.dim):
            out.append(FockVector.from_dense(self.n, v, self.eps))
            v = L @ v
        return out

    def contents(self) -> dict:
        e1, e2 = self.eps
        return {s: content_value(s, e1, e2) for s in self.addable}

    def outer_contents(self) -> dict:
        e1, e2 = self.eps
        return {r: content_value(r, e1, e2) for r in self.outer}


def _check_distinct(values, what: str, lam, eps):
    seen = {}
    for s, v in values.items():
        if v in seen:
            raise DegenerateParameterError(
                f"{what} {seen[v]} and {s} of {lam} share the content {v} at (e1, e2) = {eps}"
            )
        seen[v] = s


@lru_cache(maxsize=1024)
def _build_cyclic(lam: Partition, eps: tuple) -> CyclicSpace:
    n = lam.size
    e1, e2 = eps
    cd = corners(lam)
    _check_distinct({s: content_value(s, e1, e2) for s in cd.addable}, "addable corners", lam, eps)
    j = compute_jacks(n, e1, e2)[lam]
    L = lax_matrix(n, eps).matrix
    g = _gram(n, eps)

    bs, norms, images = [], [], []
    v = j.to_dense()
    limit = dimension(n) + 1
    while True:
        # orthogonalize against the basis so far; v is in the span of L^k j
        for b, nb in zip(bs, norms):
            c = _dot(b, v, g) / nb
            if c:
                v = [x - c * y for x, y in zip(v, b)]
        if not any(v):
            break
        nv = _dot(v, v, g)
        if nv == 0:
            raise DegenerateParameterError(f"isotropic Krylov vector for {lam} at {eps}; need hbar > 0")
        bs.append(v)
        norms.append(nv)
        if len(bs) > limit:
            raise TheoremViolationError(f"Krylov space of {lam} does not saturate")
        images.append(L @ v)
        v = images[-1]
    m = len(bs)
    if m != len(cd.addable):
        raise TheoremViolationError(f"dim Z_{lam} = {m}, expected |A| = {len(cd.addable)}")
    rows = [[_dot(bs[i], images[k], g) / norms[i] for k in range(m)] for i in range(m)]
    M = ExactMatrix(rows)
    # L maps Z into itself: each image must equal its expansion in the basis
    for k in range(m):
        rebuilt = [sum((M[i, k] * bs[i][t] for i in range(m)), Fraction(0)) for t in range(len(g))]
        if rebuilt != images[k]:
            raise TheoremViolationError(f"Z_{lam} is not L-invariant")
    return CyclicSpace(lam, eps, j, tuple(tuple(b) for b in bs), tuple(norms), M, cd.addable, cd.outer)


def build_cyclic(lam, e1, e2) -> CyclicSpace:
    return _build_cyclic(Partition(lam), normalize_eps((e1, e2)))


@dataclass(frozen=True)
class EigenSystem:
    lam: Partition
    eps: tuple
    eigenvalues: dict  # cell -> Fraction
    psi: dict  # cell -> FockVector
    coords: dict  # cell -> b-coordinates of psi (Pi_J normalized, so coords[0] == 1)

    def __getitem__(self, s) -> FockVector:
        return self.psi[tuple(s)]

    def to_json(self) -> dict:
        from nslax.exactalg import format_rational

        return {
            "lambda": list(self.lam),
            "eps": [format_rational(x) for x in self.eps],
            "eigenfunctions": [
                {"cell": list(s), "eigenvalue": format_rational(self.eigenvalues[s]), "psi": self.psi[s].to_json()}
                for s in self.psi
            ],
        }


def _resolvent_route(Z: CyclicSpace, sigma: Fraction) -> list[Fraction]:
    """Coordinates of J + (sigma - L~)^{-1} J~."""
    Lt = Z.compressed_Ltilde
    if Lt.nrows == 0:
        return [Fraction(1)]
    A = (-Lt).shift(-sigma)
    try:
        x = solve_linear(A, Z.Jtilde_coords)
    except SingularMatrixError as exc:
        raise TheoremViolationError(f"{sigma} is in the spectrum of the compressed operator") from exc
    return [Fraction(1)] + list(x)


@lru_cache(maxsize=1024)
def _eigenfunctions(Z: CyclicSpace) -> EigenSystem:
    M = Z.compressed_L
    n = Z.n
    vals, psis, coords = {}, {}, {}
    for s, sigma in Z.contents().items():
        ker = kernel_basis(M.shift(sigma))
        if len(ker) != 1:
            raise TheoremViolationError(f"eigenspace of {sigma} in Z_{Z.lam} has dimension {len(ker)}")
        raw = ker[0]
        lifted = Z.lift(raw)
        # pi_0 normalization: pi_0(raw) = gamma * j_lambda
        p0 = pi_0(lifted)
        ones = Partition([1] * n)
        gamma = p0.coeff(ones) if n else p0.coeff(())
        if gamma == 0 or p0 != Z.jack.scale(gamma):
            raise TheoremViolationError(f"pi_0 of the {s}-eigenvector of Z_{Z.lam} is not a nonzero multiple of j")
        x = [c / gamma for c in raw]
        if x[0] != 1:
            raise TheoremViolationError(f"pi_0 and Pi_J normalizations disagree for ({Z.lam}, {s})")
        y = _resolvent_route(Z, sigma)
        if x != y:
            raise TheoremViolationError(f"kernel and resolvent routes disagree for ({Z.lam}, {s})")
        vals[s] = sigma
        coords[s] = tuple(x)
        psis[s] = Z.lift(x)
    return EigenSystem(Z.lam, Z.eps, vals, psis, coords)


def eigenfunctions(Z: CyclicSpace) -> EigenSystem:
    """psi_lambda^s for every addable corner s, by kernel and by resolvent formula (checked equal)."""
    return _eigenfunctions(Z)


def psi(lam, s, e1, e2) -> FockVector:
    return eigenfunctions(build_cyclic(lam, e1, e2))[tuple(s)]


def superposition_check(Z: CyclicSpace, E: EigenSystem) -> bool:
    """j_lambda == sum_s tau_lambda^s psi_lambda^s with the corner-formula weights."""
    tau = transition_weights_at(Z.lam, *Z.eps)
    total = FockVector(Z.n, {}, Z.eps)
    for s, w in tau.items():
        total = total + E[s].scale(w)
    return total == Z.jack


@dataclass(frozen=True)
class TitchmarshWeyl:
    T: RationalFunction
    Ttilde: RationalFunction
    residues: dict  # addable cell -> tau
    residues_tilde: dict  # outer cell -> tau~


def titchmarsh_weyl(Z: CyclicSpace) -> TitchmarshWeyl:
    P = char_poly(Z.compressed_L)
    Q = char_poly(Z.compressed_Ltilde) if Z.dim > 1 else UniPoly([1])
    T = RationalFunction(Q, P)
    u = RationalFunction(UniPoly.x())
    Tt = u - T.reciprocal()
    contents = Z.contents()
    _, res = T.partial_fractions(list(contents.values()))
    residues = {s: res[c] for s, c in contents.items()}
    residues_tilde = {}
    outer = Z.outer_contents()
    if outer:
        _check_distinct(outer, "outer corners", Z.lam, Z.eps)
        _, rt = Tt.partial_fractions(list(outer.values()))
        residues_tilde = {r: rt[c] for r, c in outer.items()}
    return TitchmarshWeyl(T, Tt, residues, residues_tilde)


def _psi_tilde(Z: CyclicSpace, sigma_t: Fraction) -> list[Fraction]:
    """Coordinates of (L - sigma~)^{-1} J."""
    e0 = [Fraction(1)] + [Fraction(0)] * (Z.dim - 1)
    return solve_linear(Z.compressed_L.shift(sigma_t), e0)


def verify_appendix(Z: CyclicSpace, E: EigenSystem, tw: TitchmarshWeyl | None = None) -> Report:
    """Interlacing, norm/residue identities, resolvent formulas and 1/T + T~ = u for one Z_lambda."""
    tw = tw or titchmarsh_weyl(Z)
    lam = Z.lam
    rep = Report(f"cyclic-space identities for {lam} at {Z.eps}")
    M, Lt = Z.compressed_L, Z.compressed_Ltilde
    rep.add("a = 0", Z.a == 0, f"a = {Z.a}")
    sig = sorted(Z.contents().values())
    sig_t = sorted(Z.outer_contents().values())
    rep.add("spec(L|Z) = addable contents", char_poly(M) == UniPoly.from_roots(sig))
    if Z.dim > 1:
        rep.add("spec(L~) = outer contents", char_poly(Lt) == UniPoly.from_roots(sig_t))
    merged = sorted([(x, 0) for x in sig] + [(x, 1) for x in sig_t])
    pattern = [k for _, k in merged]
    strict = len(set(sig + sig_t)) == len(sig) + len(sig_t)
    rep.add("strict interlacing", strict and pattern == [i % 2 for i in range(len(pattern))], str(merged))
    u = RationalFunction(UniPoly.x())
    rep.add("1/T + T~ = u", tw.T.reciprocal() + tw.Ttilde == u)
    rep.add("T = corner product", tw.T == t_lambda(lam).specialize(*Z.eps))
    weights = transition_weights_at(lam, *Z.eps)
    J = [Fraction(1)] + [Fraction(0)] * (Z.dim - 1)
    nJ = Z.norms[0]
    for s, x in E.coords.items():
        tau = tw.residues[s]
        rep.add(f"residue = weight {s}", tau == weights[s], f"{tau} vs {weights[s]}")
        rep.add(f"tau > 0 {s}", tau > 0, str(tau))
        rep.add(f"tau |psi|^2 = |J|^2 {s}", tau * Z.coord_inner(x, x) == nJ)
        rep.add(f"Pi_J psi = J {s}", x[0] == 1)
        rep.add(f"L psi = [s] psi {s}", list(M @ list(x)) == [E.eigenvalues[s] * c for c in x])
    total = [Fraction(0)] * Z.dim
    for r, st in Z.outer_contents().items():
        y = _psi_tilde(Z, st)
        Ly = M @ y
        rep.add(f"psi~ in complement {r}", y[0] == 0)
        rep.add(f"Pi_J L psi~ = J {r}", Ly[0] == 1)
        rep.add(f"L~ psi~ = sigma~ psi~ {r}", list(Lt @ y[1:]) == [st * c for c in y[1:]])
        tt = tw.residues_tilde[r]
        rep.add(f"tau~ > 0 {r}", tt > 0, str(tt))
        rep.add(f"tau~ |psi~|^2 = |J|^2 {r}", tt * Z.coord_inner(y, y) == nJ)
        total = [a + tt * b for a, b in zip(total, y)]
    rep.add("J~ = sum tau~ psi~", total == [Fraction(0)] + Z.Jtilde_coords)
    rep.add("J = sum tau psi", [sum(tw.residues[s] * x[i] for s, x in E.coords.items()) for i in range(Z.dim)] == J)
    return rep


def arrival_identity(E: EigenSystem, s) -> bool:
    """sum_k V_k pi_k(psi) == [s] j_lambda in F_n."""
    s = tuple(s)
    p = E[s]
    n = p.n
    total = FockVector(n, {}, p.eps)
    for k in range(1, n + 1):
        sl = pi_l(p, k)
        if sl:
            total = total + FockVector(n - k, {(mu, 0): c for mu, c in sl.items()}, p.eps).times_v(k)
    return total == pi_0(p).scale(E.eigenvalues[s])


def decompose(n: int, e1, e2) -> Report:
    """Z_lambda over |lambda| = n: orthogonal, dimensions add up, eigenfunctions form a basis."""
    eps = normalize_eps((e1, e2))
    rep = Report(f"cyclic decomposition of F[w]_{n} at {eps}")
    g = _gram(n, eps)
    spaces = [build_cyclic(lam, *eps) for lam in enumerate_partitions(n)]
    for Z in spaces:
        rep.add(f"dim Z_{Z.lam} = |A|", Z.dim == len(Z.addable), f"{Z.dim}")
    for i, Z in enumerate(spaces):
        for W in spaces[i + 1 :]:
            ok = all(_dot(b, c, g) == 0 for b in Z.basis_vectors for c in W.basis_vectors)
            rep.add(f"Z_{Z.lam} orthogonal to Z_{W.lam}", ok)
    total = sum(Z.dim for Z in spaces)
    rep.add("sum of dims = dim F[w]_n", total == dimension(n), f"{total} vs {dimension(n)}")
    vecs = []
    for Z in spaces:
        E = eigenfunctions(Z)
        for s, p in E.psi.items():
            vecs.append(p.to_dense())
            rep.add(f"eigen ({Z.lam}, {s})", _is_eigen(p, E.eigenvalues[s]))
            rep.add(f"pi_0 psi = j ({Z.lam}, {s})", pi_0(p) == Z.jack)
    rep.add("eigenfunctions form a basis", rank(ExactMatrix(vecs)) == dimension(n) if vecs else False)
    return rep


def _is_eigen(p: FockVector, sigma) -> bool:
    from nslax.lax import apply_lax

    return apply_lax(p) == p.scale(sigma)


@dataclass
class SpectrumRow:
    lam: Partition
    cell: tuple
    content: Fraction
    weight: Fraction


def spectrum_table(n: int, e1, e2) -> list[SpectrumRow]:
    """Eigenvalues of L on F[w]_n: one row per (lambda, addable corner)."""
    rows = []
    for lam in enumerate_partitions(n):
        w = transition_weights_at(lam, e1, e2)
        for s in corners(lam).addable:
            rows.append(SpectrumRow(lam, s, content_value(s, e1, e2), w[s]))
    return rows
