from fractions import Fraction

import pytest

from nslax.errors import DegenerateParameterError
from nslax.exactalg import RationalFunction, UniPoly, char_poly
from nslax.fock import FockVector, pi_0
from nslax.lax import apply_lax
from nslax.partitions import Partition, content_value, corners, enumerate_partitions, t_lambda, transition_weights_at
from nslax.spectral import (
    _resolvent_route,
    arrival_identity,
    build_cyclic,
    decompose,
    eigenfunctions,
    psi,
    superposition_check,
    titchmarsh_weyl,
    verify_appendix,
)
from tests.conftest import POINT, POINTS

P = Partition


def spec_vector(terms, n, eps=POINT):
    return FockVector(n, {(P(mu), l): c for (mu, l), c in terms.items()}, eps)


class TestCyclicSpace:
    def test_single_box(self):
        Z = build_cyclic((1,), *POINT)
        assert Z.dim == 2
        assert char_poly(Z.compressed_L) == UniPoly.from_roots([2, -3])
        assert Z.a == 0

    def test_empty(self):
        Z = build_cyclic((), *POINT)
        assert Z.dim == 1
        assert Z.compressed_L[0, 0] == 0

    def test_hook(self):
        assert build_cyclic((2, 1), *POINT).dim == 3

    def test_krylov_vectors_span_the_space(self):
        Z = build_cyclic((3, 1), *POINT)
        kry = Z.krylov()
        assert kry[0] == Z.jack
        assert kry[1] == apply_lax(Z.jack)

    def test_content_collision(self):
        # e1 = e2 merges the contents of the two addable corners of (1)
        with pytest.raises(DegenerateParameterError):
            build_cyclic((1,), 1, 1)

    @pytest.mark.parametrize("n", range(9))
    def test_dimension_and_projection(self, n):
        for lam in enumerate_partitions(n):
            Z = build_cyclic(lam, *POINT)
            assert Z.dim == len(corners(lam).addable)
            for k in Z.krylov():
                p0 = pi_0(k)
                ones = P([1] * n)
                assert p0 == Z.jack.scale(p0.coeff(ones))


class TestEigenfunctions:
    def test_single_box(self):
        E = eigenfunctions(build_cyclic((1,), *POINT))
        assert E[(1, 0)] == spec_vector({((1,), 0): 1, ((), 1): 2}, 1)
        assert E[(0, 1)] == spec_vector({((1,), 0): 1, ((), 1): -3}, 1)

    def test_hook_middle_cell(self):
        p = psi((2, 1), (1, 1), *POINT)
        assert p.coeff((2,), 1) == 4 + 6 + 9

    def test_empty(self):
        assert psi((), (0, 0), *POINT) == spec_vector({((), 0): 1}, 0)

    @pytest.mark.parametrize("n", range(9))
    def test_eigen_equation_and_normalization(self, n):
        for lam in enumerate_partitions(n):
            Z = build_cyclic(lam, *POINT)
            E = eigenfunctions(Z)
            for s, p in E.psi.items():
                assert apply_lax(p) == p.scale(content_value(s, *POINT))
                assert pi_0(p) == Z.jack

    @pytest.mark.parametrize("n", range(7))
    def test_routes_agree(self, n):
        for lam in enumerate_partitions(n):
            Z = build_cyclic(lam, *POINT)
            E = eigenfunctions(Z)
            for s, sigma in Z.contents().items():
                assert Z.lift(_resolvent_route(Z, sigma)) == E[s]

    @pytest.mark.parametrize("n", range(6))
    def test_arrival_identity(self, n):
        for lam in enumerate_partitions(n):
            E = eigenfunctions(build_cyclic(lam, *POINT))
            assert all(arrival_identity(E, s) for s in E.psi)


class TestSuperposition:
    def test_single_box_by_hand(self):
        Z = build_cyclic((1,), *POINT)
        E = eigenfunctions(Z)
        total = E[(1, 0)].scale(Fraction(3, 5)) + E[(0, 1)].scale(Fraction(2, 5))
        assert total == spec_vector({((1,), 0): 1}, 1)
        assert superposition_check(Z, E)

    @pytest.mark.parametrize("n", range(9))
    def test_all(self, n):
        for lam in enumerate_partitions(n):
            Z = build_cyclic(lam, *POINT)
            assert superposition_check(Z, eigenfunctions(Z))


class TestTitchmarshWeyl:
    def test_single_box(self):
        tw = titchmarsh_weyl(build_cyclic((1,), *POINT))
        assert tw.T == RationalFunction(UniPoly.from_roots([-1]), UniPoly.from_roots([2, -3]))
        assert tw.residues[(1, 0)] == Fraction(3, 5)  # -e2 / (e1 - e2)

    def test_empty(self):
        tw = titchmarsh_weyl(build_cyclic((), *POINT))
        assert tw.T == RationalFunction(UniPoly([1]), UniPoly.x())
        assert tw.residues == {(0, 0): 1}

    @pytest.mark.parametrize("n", range(9))
    def test_matches_corner_product(self, n):
        for lam in enumerate_partitions(n):
            Z = build_cyclic(lam, *POINT)
            tw = titchmarsh_weyl(Z)
            ref = t_lambda(lam).specialize(*POINT)
            assert tw.T.num == ref.num and tw.T.den == ref.den
            assert tw.residues == transition_weights_at(lam, *POINT)


class TestAppendix:
    def test_single_box(self):
        Z = build_cyclic((1,), *POINT)
        rep = verify_appendix(Z, eigenfunctions(Z))
        assert rep.ok
        assert sorted(Z.contents().values()) == [-3, 2]
        assert list(Z.outer_contents().values()) == [-1]

    def test_empty_is_vacuous(self):
        Z = build_cyclic((), *POINT)
        assert verify_appendix(Z, eigenfunctions(Z)).ok

    def test_hook_interlaces(self):
        Z = build_cyclic((2, 1), *POINT)
        sig = sorted(Z.contents().values())
        sig_t = sorted(Z.outer_contents().values())
        assert len(sig) == 3 and len(sig_t) == 2
        assert sig[0] < sig_t[0] < sig[1] < sig_t[1] < sig[2]

    @pytest.mark.parametrize("point", POINTS)
    @pytest.mark.parametrize("n", range(6))
    def test_all_identities(self, n, point):
        for lam in enumerate_partitions(n):
            Z = build_cyclic(lam, *point)
            rep = verify_appendix(Z, eigenfunctions(Z))
            assert rep.ok, rep.failures


class TestDecomposition:
    def test_degree_one(self):
        rep = decompose(1, *POINT)
        assert rep.ok
        assert build_cyclic((1,), *POINT).dim == 2

    def test_shared_eigenvalue_in_degree_four(self):
        shared = content_value((1, 1), *POINT)
        holders = [lam for lam in enumerate_partitions(4) if (1, 1) in corners(lam).addable]
        assert set(holders) == {P((3, 1)), P((2, 1, 1))}
        for lam in holders:
            assert eigenfunctions(build_cyclic(lam, *POINT)).eigenvalues[(1, 1)] == shared
        assert decompose(4, *POINT).ok

    @pytest.mark.parametrize("n", range(8))
    def test_full(self, n):
        rep = decompose(n, *POINT)
        assert rep.ok, rep.failures
