from fractions import Fraction

import pytest

from nslax.errors import ModeMismatchError, ResolventPoleError
from nslax.exactalg import ExactMatrix, ParamPoly, UniPoly, char_poly
from nslax.fock import FockVector, basis, ebar, hbar
from nslax.jack import compute_jacks
from nslax.lax import (
    DEFAULT_U0,
    apply_lax,
    check_self_adjoint,
    cut_and_join,
    hierarchy_matrix,
    lax_matrix,
    transfer_matrix,
)
from nslax.partitions import Partition, conjugate, enumerate_partitions, t_lambda, t_lambda_at
from tests.conftest import POINT, POINTS

E1, E2 = ParamPoly.e1(), ParamPoly.e2()
P = Partition


class TestApplyLax:
    def test_degree_one(self):
        w = FockVector.basis_vector((), 1)
        v1 = FockVector.basis_vector((1,), 0)
        assert apply_lax(w) == FockVector(1, {(P((1,)), 0): 1, (P(), 1): E1 + E2})
        assert apply_lax(v1) == FockVector(1, {(P(), 1): -E1 * E2})

    def test_v1_w(self):
        x = FockVector.basis_vector((1,), 1)
        want = FockVector(2, {(P((1, 1)), 0): 1, (P((1,)), 1): E1 + E2, (P(), 2): -E1 * E2})
        assert apply_lax(x) == want

    def test_constant_is_killed(self):
        assert apply_lax(FockVector.basis_vector((), 0)).is_zero()

    @pytest.mark.parametrize("n", range(9))
    def test_matrix_columns_agree(self, n):
        M = lax_matrix(n, POINT).matrix
        for j, (mu, l) in enumerate(basis(n)):
            image = apply_lax(FockVector.basis_vector(mu, l, POINT))
            assert image.n == n
            assert image.to_dense() == list(M.col(j))


class TestLaxMatrix:
    def test_degree_one(self):
        M = lax_matrix(1).matrix
        assert M == ExactMatrix([[0, 1], [-E1 * E2, E1 + E2]])
        assert char_poly(M) == UniPoly.from_roots([E1, E2])

    def test_degree_zero(self):
        assert lax_matrix(0, POINT).matrix == ExactMatrix([[0]])

    def test_size(self):
        assert lax_matrix(3).dim == 7

    def test_parameters(self):
        assert ebar(POINT) == -1 and hbar(POINT) == 6

    @pytest.mark.parametrize("n", range(9))
    def test_self_adjoint(self, n):
        for point in POINTS:
            assert check_self_adjoint(lax_matrix(n, point))

    def test_detects_asymmetry(self):
        M = lax_matrix(1, POINT).matrix
        bumped = ExactMatrix([[0, 2], [6, -1]])
        assert check_self_adjoint(M, POINT, 1)
        assert not check_self_adjoint(bumped, POINT, 1)


class TestTransfer:
    def test_degree_zero(self):
        tm = transfer_matrix(0, 7, POINT)
        assert tm.matrix == ExactMatrix([[Fraction(1, 7)]])

    def test_degree_one(self):
        assert transfer_matrix(1, 10, POINT).matrix == ExactMatrix([[Fraction(11, 104)]])

    @pytest.mark.parametrize("n", range(9))
    def test_spectrum_is_t_lambda(self, n):
        tm = transfer_matrix(n, DEFAULT_U0, POINT)
        vals = [t_lambda_at(lam, DEFAULT_U0, *POINT) for lam in enumerate_partitions(n)]
        assert char_poly(tm.matrix) == UniPoly.from_roots(vals)

    @pytest.mark.parametrize("n", range(7))
    def test_commute_for_distinct_u0(self, n):
        a = transfer_matrix(n, DEFAULT_U0, POINT).matrix
        b = transfer_matrix(n, Fraction(-50, 3), POINT).matrix
        assert a @ b == b @ a

    def test_pole_is_reported(self):
        # 2 = e1 is an eigenvalue of L on F[w]_1
        with pytest.raises(ResolventPoleError):
            transfer_matrix(1, 2, POINT)

    def test_needs_point(self):
        with pytest.raises(ModeMismatchError):
            transfer_matrix(2, 10, None)


class TestCutAndJoin:
    @pytest.mark.parametrize("n", range(6))
    def test_equals_third_hierarchy_member(self, n):
        assert cut_and_join(n) == hierarchy_matrix(n, 3)
        assert cut_and_join(n, POINT) == hierarchy_matrix(n, 3, POINT)

    def test_degree_one(self):
        assert cut_and_join(1) == ExactMatrix([[(E1 + E2) * (-E1 * E2)]])

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_eigenvalues_from_series(self, n):
        H = cut_and_join(n, POINT)
        jacks = compute_jacks(n, *POINT)
        k = len(enumerate_partitions(n))
        for lam in enumerate_partitions(n):
            ev = t_lambda(lam).specialize(*POINT).series_at_infinity(4)[4]
            v = jacks[lam].to_dense()[:k]
            assert H @ v == [ev * x for x in v]

    @pytest.mark.parametrize("n", range(2, 7))
    def test_classical_point_spectrum_is_conjugation_symmetric(self, n):
        point = (Fraction(1), Fraction(-1))  # ebar = 0
        spec = [t_lambda(lam).specialize(*point).series_at_infinity(4)[4] for lam in enumerate_partitions(n)]
        assert char_poly(cut_and_join(n, point)) == UniPoly.from_roots(spec)
        by_lam = dict(zip(enumerate_partitions(n), spec))
        assert sorted(spec) == sorted(-by_lam[conjugate(lam)] for lam in by_lam)


@pytest.mark.parametrize("n", range(7))
def test_projection_of_powers_stays_on_jack(n):
    jacks = compute_jacks(n, *POINT)
    L = lax_matrix(n, POINT).matrix
    k = len(enumerate_partitions(n))
    for lam in enumerate_partitions(n):
        j = jacks[lam].to_dense()
        v = list(j)
        steps = 2 * L.nrows if n <= 4 else 12
        for _ in range(steps):
            v = L @ v
            head = v[:k]
            # pi_0 L^l j must be a multiple of j (last coordinate of j is 1)
            c = head[k - 1]
            assert head == [c * x for x in j[:k]]
