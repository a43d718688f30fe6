"""The ten acceptance criteria, one test each.

Every criterion prints a PASS/FAIL line with its wall time. Run directly with
``python -m tests.test_acceptance`` or through pytest (``-s`` shows the lines
as they happen; the summary section lists them at the end either way).
"""

import sys
import time

from click.testing import CliRunner

from nslax import eigenanalysis, jack, lax, spectral
from nslax.cli import main
from nslax.eigenanalysis import (
    check_integrality,
    check_jack_slice,
    check_principal,
    check_symmetry,
    check_t_bridge,
    check_top_coefficient,
    integrality_ledger,
    symbolic_psi,
    symbolic_psi_table,
    top_coefficient_formula,
)
from nslax.exactalg import ExactMatrix, ParamPoly, UniPoly, char_poly
from nslax.fock import dimension, ebar, hbar, pi_0
from nslax.lax import DEFAULT_U0, lax_matrix, transfer_matrix
from nslax.partitions import Partition, corners, enumerate_partitions, t_lambda_at, transition_weights_at
from nslax.spectral import build_cyclic, decompose, eigenfunctions, superposition_check, verify_appendix
from nslax.suites import random_rationals
from tests.acceptance_log import criterion
from tests.conftest import POINT, POINTS
from tests.golden import W_TERMS, golden_coefficients

E1, E2 = ParamPoly.e1(), ParamPoly.e2()


def cold_start():
    """Drop every in-process cache so timings reflect a fresh computation."""
    for fn in (
        lax._lax_matrix,
        jack._compute_jacks,
        jack.jack_characters,
        spectral._build_cyclic,
        spectral._eigenfunctions,
        eigenanalysis.symbolic_psi_table,
        eigenanalysis.symbolic_titchmarsh_weyl,
    ):
        fn.cache_clear()


def euler_partition_counts(n_max):
    """p(0..n_max) from the pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def test_criterion_1_degree_one_example():
    with criterion(1, "degree-1 worked example, under 1 s"):
        cold_start()
        start = time.perf_counter()
        M = lax_matrix(1).matrix
        assert M == ExactMatrix([[0, 1], [hbar(None), ebar(None)]])
        assert char_poly(M) == UniPoly.from_roots([E1, E2])
        assert symbolic_psi((1,), (1, 0)).coeffs == {(Partition((1,)), 0): 1, (Partition(()), 1): E1}
        assert symbolic_psi((1,), (0, 1)).coeffs == {(Partition((1,)), 0): 1, (Partition(()), 1): E2}
        assert time.perf_counter() - start < 1


def test_criterion_2_golden_table():
    with criterion(2, "all listed eigenfunctions of degree <= 3 symbolically, under 10 s"):
        cold_start()
        start = time.perf_counter()
        listed = {(Partition(lam), s) for lam, s in W_TERMS}
        computed = {key for n in range(4) for key in symbolic_psi_table(n)}
        assert listed == computed and len(listed) == 14
        for lam, s in W_TERMS:
            want = {(Partition(mu), l): c for (mu, l), c in golden_coefficients(lam, s).items()}
            assert symbolic_psi(lam, s).coeffs == want, (lam, s)
        assert time.perf_counter() - start < 10


def test_criterion_3_cyclic_decomposition():
    with criterion(3, "cyclic decomposition and simple spectrum for n <= 8 at (2, -3)"):
        for n in range(9):
            rep = decompose(n, *POINT)
            assert rep.ok, rep.failures


def test_criterion_4_superposition():
    with criterion(4, "pi_0 psi = j and j = sum tau psi for |lambda| <= 8, tau > 0 at three points"):
        for n in range(9):
            for lam in enumerate_partitions(n):
                Z = build_cyclic(lam, *POINT)
                E = eigenfunctions(Z)
                assert superposition_check(Z, E), lam
                assert all(pi_0(p) == Z.jack for p in E.psi.values())
        for point in POINTS:
            for n in range(9):
                for lam in enumerate_partitions(n):
                    weights = transition_weights_at(lam, *point)
                    assert all(w > 0 for w in weights.values()), (lam, point)
                    assert sum(weights.values()) == 1


def test_criterion_5_transfer_bridge():
    with criterion(5, "determinant ratio equals corner product; transfer spectra, n <= 6"):
        for n in range(7):
            for lam in enumerate_partitions(n):
                assert check_t_bridge(lam), lam
            tm = transfer_matrix(n, DEFAULT_U0, POINT)
            vals = [t_lambda_at(lam, DEFAULT_U0, *POINT) for lam in enumerate_partitions(n)]
            assert char_poly(tm.matrix) == UniPoly.from_roots(vals)


def test_criterion_6_appendix():
    with criterion(6, "cyclic-space identities and both eigenvector routes, |lambda| <= 6"):
        for n in range(7):
            for lam in enumerate_partitions(n):
                Z = build_cyclic(lam, *POINT)
                rep = verify_appendix(Z, eigenfunctions(Z))
                assert rep.ok, (lam, rep.failures)


def test_criterion_7_principal_specializations():
    with criterion(7, "principal specializations at 5 random z, |lambda| <= 8"):
        zs = random_rationals(5)
        assert len(set(zs)) == 5
        for n in range(9):
            for lam in enumerate_partitions(n):
                for s in corners(lam).addable:
                    rep = check_principal(lam, s, zs, *POINT)
                    assert rep.ok, (lam, s, rep.failures)
        assert top_coefficient_formula((2, 1), (2, 0)) == 2 * E1**2 * E2
        assert symbolic_psi((2, 1), (2, 0))[((), 3)] == 2 * E1**2 * E2
        for n in range(8):
            assert all(check_top_coefficient(p) for p in symbolic_psi_table(n).values())


def test_criterion_8_integrality(tmp_path):
    with criterion(8, "integrality of all eigenfunction coefficients, |lambda| <= 7; fast mode under 2 min"):
        ok, entries = integrality_ledger(7, tmp_path / "integrality_ledger.json")
        failed = [e for e in entries if not e["pass"]]
        assert ok, f"counterexamples preserved in the ledger: {failed}"
        assert len(entries) == sum(len(corners(lam).addable) for n in range(8) for lam in enumerate_partitions(n))
        for n in range(8):
            assert all(check_jack_slice(p) and check_integrality(p) for p in symbolic_psi_table(n).values())
        cold_start()
        start = time.perf_counter()
        res = CliRunner().invoke(
            main, ["--cache-dir", str(tmp_path / "cache"), "verify", "--suite", "integrality", "--max-degree", "5"]
        )
        assert res.exit_code == 0, res.output
        assert time.perf_counter() - start < 120


def test_criterion_9_combinatorics():
    with criterion(9, "dimension formula for n <= 12 and corner counting for n <= 30"):
        p = euler_partition_counts(31)
        for n in range(13):
            assert dimension(n) == sum(p[: n + 1])
            assert len(lax_matrix(n, POINT).matrix.rows) == sum(p[: n + 1])
        for n in range(31):
            addable = sum(len(corners(lam).addable) for lam in enumerate_partitions(n))
            removable = sum(len(corners(nu).removable) for nu in enumerate_partitions(n + 1))
            assert len(enumerate_partitions(n)) == p[n]
            assert addable == sum(p[: n + 1]) == removable


def test_criterion_10_symmetry():
    with criterion(10, "e1 <-> e2, lambda <-> lambda', s <-> s' invariance, |lambda| <= 5"):
        for n in range(6):
            for lam in enumerate_partitions(n):
                for s in corners(lam).addable:
                    assert check_symmetry(lam, s), (lam, s)


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q", "-s"]))
