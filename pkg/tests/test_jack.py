from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nslax.errors import DegenerateParameterError
from nslax.exactalg import ParamPoly
from nslax.fock import FockVector, principal_specialize
from nslax.jack import (
    JackCharacterTable,
    check_stanley,
    compute_jacks,
    jack_characters,
    stanley_value,
    validate_jacks,
)
from nslax.partitions import Partition, enumerate_partitions
from tests.conftest import POINT, POINTS, nonzero_rationals

E1, E2 = ParamPoly.e1(), ParamPoly.e2()
P = Partition


def poly_vector(n, terms):
    return FockVector(n, {(P(mu), 0): c for mu, c in terms.items()})


# the degree <= 3 Jack polynomials in the V-variables
KNOWN = {
    (): poly_vector(0, {(): 1}),
    (1,): poly_vector(1, {(1,): 1}),
    (2,): poly_vector(2, {(1, 1): 1, (2,): E1}),
    (1, 1): poly_vector(2, {(1, 1): 1, (2,): E2}),
    (3,): poly_vector(3, {(1, 1, 1): 1, (2, 1): 3 * E1, (3,): 2 * E1**2}),
    (2, 1): poly_vector(3, {(1, 1, 1): 1, (2, 1): E1 + E2, (3,): E1 * E2}),
    (1, 1, 1): poly_vector(3, {(1, 1, 1): 1, (2, 1): 3 * E2, (3,): 2 * E2**2}),
}


class TestComputeJacks:
    @pytest.mark.parametrize("point", POINTS + [(Fraction(7, 2), Fraction(-1, 3))])
    def test_low_degrees(self, point):
        for lam, want in KNOWN.items():
            got = compute_jacks(sum(lam), *point)[lam]
            assert got == want.specialize(*point)

    def test_normalization(self):
        for n in range(7):
            ones = P([1] * n)
            for lam, j in compute_jacks(n, *POINT).items():
                assert j.coeff(ones) == 1
                assert all(l == 0 for _, l in j.coeffs)

    def test_degenerate_point(self):
        # e1 = e2 = 0 makes every transfer eigenvalue the same
        with pytest.raises(DegenerateParameterError):
            compute_jacks(2, 0, 0)


class TestCharacters:
    def test_known_characters(self):
        t2 = jack_characters(2)
        assert t2[(2,), (2,)] == E1
        assert t2[(1, 1), (2,)] == E2
        assert jack_characters(3)[(2, 1), (3,)] == E1 * E2

    def test_low_degrees_symbolic(self):
        for lam, want in KNOWN.items():
            assert jack_characters(sum(lam)).jack(lam) == want

    @pytest.mark.parametrize("n", range(7))
    def test_monic_homogeneous_integral(self, n):
        table = jack_characters(n)
        for lam in enumerate_partitions(n):
            assert table[lam, [1] * n] == 1
            for mu, chi in table.row(lam).items():
                assert chi.is_homogeneous(n - len(mu))
                assert chi.has_integer_coefficients()

    @pytest.mark.parametrize("n", [4, 5])
    def test_symbolic_matches_direct_computation(self, n):
        table = jack_characters(n)
        point = (Fraction(5, 2), Fraction(-7, 3))
        direct = compute_jacks(n, *point)
        for lam in enumerate_partitions(n):
            assert table.jack(lam).specialize(*point) == direct[lam]

    def test_json_roundtrip(self):
        table = jack_characters(4)
        again = JackCharacterTable.from_json(table.to_json())
        assert again.chars == table.chars


class TestValidation:
    @pytest.mark.parametrize("n", range(7))
    def test_validate_at_test_point(self, n):
        rep = validate_jacks(compute_jacks(n, *POINT))
        assert rep.ok, rep.failures

    def test_swapped_point_conjugate(self):
        a = compute_jacks(4, 2, -3)
        b = compute_jacks(4, -3, 2)
        assert a[(3, 1)] == FockVector(4, b[(2, 1, 1)].coeffs, (2, -3))

    @pytest.mark.parametrize("n", range(9))
    def test_stanley_specialization(self, n):
        rep = check_stanley(compute_jacks(n, *POINT), [Fraction(3), Fraction(-7, 2), Fraction(1, 5), 0, Fraction(11, 3)])
        assert rep.ok, rep.failures

    @given(nonzero_rationals, st.sampled_from(enumerate_partitions(5)))
    @settings(max_examples=25, deadline=None)
    def test_stanley_random(self, z, lam):
        j = compute_jacks(5, *POINT)[lam]
        assert principal_specialize(j, 0, z) == stanley_value(lam, z, *POINT)
