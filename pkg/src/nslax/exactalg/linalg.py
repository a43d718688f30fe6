"""Exact dense linear algebra over Q and Q[e1, e2].

Elimination is fraction-free (Bareiss). Rational inputs are first scaled
row by row to integers, which keeps the inner loop on Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from nslax.errors import DimensionMismatchError, NotDivisibleError, SingularMatrixError
from nslax.exactalg.polynomial import ParamPoly, UniPoly


class ExactMatrix:
    """Immutable row-major matrix of exact scalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatchError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int, one=1) -> "ExactMatrix":
        return cls([[one if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "ExactMatrix":
        n = m if n is None else n
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "ExactMatrix":
        if not cols:
            return cls([])
        return cls(zip(*cols))

    @classmethod
    def diagonal(cls, entries: Sequence) -> "ExactMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows)) if self.rows else self

    T = property(transpose)

    def map(self, fn) -> "ExactMatrix":
        return ExactMatrix([[fn(x) for x in r] for r in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c) -> "ExactMatrix":
        return self.map(lambda x: x * c)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
            cols = other.transpose().rows
            return ExactMatrix([[_dot(r, c) for c in cols] for r in self.rows])
        vec = list(other)
        if len(vec) != self.ncols:
            raise DimensionMismatchError(f"{self.shape} @ vector of length {len(vec)}")
        return [_dot(r, vec) for r in self.rows]

    def shift(self, c) -> "ExactMatrix":
        """``self - c * I``."""
        return ExactMatrix([[x - c if i == j else x for j, x in enumerate(r)] for i, r in enumerate(self.rows)])

    def trace(self):
        t = 0
        for i in range(min(self.nrows, self.ncols)):
            t = t + self.rows[i][i]
        return t

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(self.rows)

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"ExactMatrix({self.tolist()!r})"


def _dot(a, b):
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{a} / {b}")
        return q
    if isinstance(a, ParamPoly) or isinstance(b, ParamPoly):
        return ParamPoly.coerce(a).exact_div(ParamPoly.coerce(b))
    return Fraction(a) / b


def _to_integer_rows(rows: list[list]) -> list[list]:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for r in rows:
        m = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                m = lcm(m, x.denominator)
        out.append([int(x * m) for x in r])
    return out


def _prepare(rows: list[list]) -> tuple[list[list], bool]:
    if all(_is_rational(x) for r in rows for x in r):
        return _to_integer_rows(rows), True
    return [[x if isinstance(x, ParamPoly) else ParamPoly.const(x) for x in r] for r in rows], False


def _bareiss_echelon(rows: list[list], ncols_elim: int) -> tuple[list[list], list[int]]:
    """Fraction-free row echelon form, eliminating in the first ``ncols_elim`` columns.

    Pivot rule: first nonzero entry at or below the current row. Returns the
    echelon rows (modified in place) and the pivot columns.
    """
    m = len(rows)
    width = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols_elim):
        if r >= m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        pr = rows[r]
        for i in range(r + 1, m):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, width):
                v = piv * ri[j]
                if f != 0 and pr[j] != 0:
                    v = v - f * pr[j]
                ri[j] = _exact_div(v, prev) if prev != 1 else v
            ri[c] = 0 * f
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots


def solve_many(A: ExactMatrix, B: Sequence[Sequence]) -> list[list]:
    """Solve ``A X = B`` for a list of right-hand sides; returns the solution vectors."""
    if not A.is_square():
        raise DimensionMismatchError(f"solve needs a square matrix, got {A.shape}")
    n = A.nrows
    for b in B:
        if len(b) != n:
            raise DimensionMismatchError(f"rhs of length {len(b)} for {n}x{n} system")
    if n == 0:
        return [[] for _ in B]
    aug = [list(A.rows[i]) + [b[i] for b in B] for i in range(n)]
    rows, integral = _prepare(aug)
    rows, pivots = _bareiss_echelon(rows, n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    sols = []
    for k in range(len(B)):
        x = [None] * n
        for i in range(n - 1, -1, -1):
            s = rows[i][n + k]
            for j in range(i + 1, n):
                if rows[i][j] != 0:
                    s = s - rows[i][j] * x[j]
            x[i] = Fraction(s, rows[i][i]) if integral else _exact_div(s, rows[i][i])
        sols.append(x)
    return sols


def solve_linear(A: ExactMatrix, b: Sequence) -> list:
    """Exact solution of ``A x = b`` by Bareiss elimination and back-substitution."""
    return solve_many(A, [list(b)])[0]


def determinant(A: ExactMatrix):
    """Determinant via Bareiss: the last pivot of the fraction-free echelon form."""
    if not A.is_square():
        raise DimensionMismatchError("determinant of a non-square matrix")
    n = A.nrows
    if n == 0:
        return Fraction(1)
    rows = [list(r) for r in A.rows]
    scale = Fraction(1)
    if all(_is_rational(x) for r in rows for x in r):
        ints = _to_integer_rows(rows)
        for r, ir in zip(rows, ints):
            nz = next((x for x in r if x != 0), None)
            if nz is not None:
                scale *= Fraction(ir[r.index(nz)]) / nz
        rows = ints
    else:
        rows, _ = _prepare(rows)
    # track row swaps for the sign
    sign = 1
    prev = 1
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return 0 * rows[0][0] if not _is_rational(rows[0][0]) else Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        piv = rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c]
            for j in range(c + 1, n):
                v = piv * rows[i][j] - f * rows[c][j]
                rows[i][j] = _exact_div(v, prev) if prev != 1 else v
            rows[i][c] = 0 * f
        prev = piv
    det = rows[n - 1][n - 1] * sign
    if isinstance(det, int):
        return Fraction(det) / scale
    return det / scale if scale != 1 else det


def _kernel_from_echelon(rows: list[list], pivots: list[int], ncols: int, integral: bool) -> list[list]:
    """Back-substitute one kernel vector per free column.

    Integer rows are solved over Q. Polynomial rows are solved without
    division by rescaling the partial vector at each pivot.
    """
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0) if integral else 0] * ncols
        x[f] = Fraction(1) if integral else ParamPoly.const(1)
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            s = 0
            for j in range(p + 1, ncols):
                if x[j] != 0 and rows[r][j] != 0:
                    s = s + rows[r][j] * x[j]
            if s == 0:
                continue
            a = rows[r][p]
            if integral:
                x[p] = -s / a
            else:
                # a * x_p + s = 0: scale the vector by a, then x_p = -s
                if a != 1:
                    x = [v * a for v in x]
                x[p] = -s
        basis.append(x)
    return basis


def kernel_basis(A: ExactMatrix) -> list[list]:
    """Basis of the right null space; empty iff A has full column rank.

    Rational matrices yield Fraction vectors whose first nonzero entry is 1;
    polynomial matrices yield polynomial vectors (not normalized).
    """
    if A.nrows == 0:
        return [[Fraction(int(i == j)) for i in range(A.ncols)] for j in range(A.ncols)]
    rows, integral = _prepare([list(r) for r in A.rows])
    rows, pivots = _bareiss_echelon(rows, A.ncols)
    vecs = _kernel_from_echelon(rows, pivots, A.ncols, integral)
    if not integral:
        return vecs
    out = []
    for v in vecs:
        lead = next(x for x in v if x != 0)
        out.append([x / lead for x in v])
    return out


def rank(A: ExactMatrix) -> int:
    if A.nrows == 0 or A.ncols == 0:
        return 0
    rows, _ = _prepare([list(r) for r in A.rows])
    _, pivots = _bareiss_echelon(rows, A.ncols)
    return len(pivots)


def char_poly(A: ExactMatrix) -> UniPoly:
    """Monic ``det(u I - A)`` by Faddeev-LeVerrier.

    Only divisions by the integers 1..n occur, so this is exact over Q and
    over Q[e1, e2].
    """
    if not A.is_square():
        raise DimensionMismatchError("characteristic polynomial of a non-square matrix")
    n = A.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = ExactMatrix.identity(n)
    for k in range(1, n + 1):
        AM = A @ M
        c = -AM.trace() / Fraction(k)
        coeffs[n - k] = c
        M = AM.shift(-c)
    return UniPoly(coeffs)
