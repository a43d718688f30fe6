"""Verification suites, one function per suite and degree.

Each suite function takes a degree n and a point (e1, e2) (ignored by the
symbolic suites) and returns a Report. `run_suite` loops over degrees.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from nslax.eigenanalysis import (
    check_integrality,
    check_jack_slice,
    check_principal,
    check_symmetry,
    check_t_bridge,
    check_top_coefficient,
    integrality_witness,
    sign_pattern,
    symbolic_psi_table,
)
from nslax.errors import NSLaxError, TheoremViolationError
from nslax.exactalg import UniPoly, char_poly
from nslax.jack import check_stanley, compute_jacks, jack_characters, validate_jacks
from nslax.lax import DEFAULT_U0, check_self_adjoint, lax_matrix, transfer_matrix
from nslax.partitions import conjugate, corners, enumerate_partitions, t_lambda_at, transition_weights_at
from nslax.report import Report
from nslax.spectral import build_cyclic, decompose, eigenfunctions, superposition_check, verify_appendix

Z_SEED = 20240601


def random_rationals(count: int, seed: int = Z_SEED) -> list[Fraction]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        z = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if z not in out:
            out.append(z)
    return out


def suite_decomposition(n: int, eps) -> Report:
    rep = decompose(n, *eps)
    rep.add(f"self-adjoint L on F[w]_{n}", check_self_adjoint(lax_matrix(n, eps)))
    return rep


def suite_appendix(n: int, eps) -> Report:
    rep = Report(f"appendix identities, degree {n}")
    for lam in enumerate_partitions(n):
        Z = build_cyclic(lam, *eps)
        rep.extend(verify_appendix(Z, eigenfunctions(Z)), prefix=f"{lam}: ")
    return rep


def suite_superposition(n: int, eps) -> Report:
    rep = Report(f"superposition, degree {n}")
    for lam in enumerate_partitions(n):
        Z = build_cyclic(lam, *eps)
        E = eigenfunctions(Z)
        rep.add(f"{lam}: j = sum tau psi", superposition_check(Z, E))
        for s, w in transition_weights_at(lam, *eps).items():
            rep.add(f"{lam} {s}: tau > 0", w > 0, str(w))
    return rep


def suite_principal(n: int, eps, zs=None) -> Report:
    zs = random_rationals(5) if zs is None else zs
    rep = Report(f"principal specializations, degree {n}")
    for lam in enumerate_partitions(n):
        for s in corners(lam).addable:
            rep.extend(check_principal(lam, s, zs, *eps), prefix=f"{lam} {s}: ")
    for (lam, s), P in symbolic_psi_table(n).items():
        rep.add(f"{lam} {s}: symbolic top coefficient", check_top_coefficient(P))
    return rep


def suite_symmetry(n: int, eps=None) -> Report:
    rep = Report(f"e1 <-> e2 symmetry, degree {n}")
    for lam, s in symbolic_psi_table(n):
        rep.add(f"{lam} {s}", check_symmetry(lam, s))
    table = jack_characters(n)
    for lam in enumerate_partitions(n):
        rep.add(f"jack {lam}", table.jack(lam).swap_eps() == table.jack(conjugate(lam)))
    return rep


def suite_integrality(n: int, eps=None) -> Report:
    rep = Report(f"integrality, degree {n}")
    try:
        jack_characters(n)
        rep.add("jack characters integral", True)
    except TheoremViolationError as exc:
        rep.add("jack characters integral", False, str(exc))
    for (lam, s), P in symbolic_psi_table(n).items():
        ok = check_integrality(P)
        witness = integrality_witness(P)
        rep.add(f"{lam} {s}", ok, "" if ok else f"witness {witness}")
        rep.add(f"{lam} {s}: w^0 slice is j", check_jack_slice(P))
        rep.data.append(
            {"n": n, "lambda": list(lam), "cell": list(s), "pass": ok, "witness": witness, "signs": sign_pattern(P)}
        )
    return rep


def suite_jack(n: int, eps) -> Report:
    table = compute_jacks(n, *eps)
    rep = validate_jacks(table)
    rep.extend(check_stanley(table, random_rationals(5)))
    sym = jack_characters(n)
    for lam in enumerate_partitions(n):
        rep.add(f"symbolic jack {lam} at point", sym.jack(lam).specialize(*eps) == table[lam])
    return rep


def suite_transfer(n: int, eps) -> Report:
    rep = Report(f"transfer operator, degree {n}")
    tm = transfer_matrix(n, DEFAULT_U0, eps)
    vals = [t_lambda_at(lam, tm.u0, *eps) for lam in enumerate_partitions(n)]
    rep.add("spectrum = {T_lambda(u0)}", char_poly(tm.matrix) == UniPoly.from_roots(vals))
    other = transfer_matrix(n, DEFAULT_U0 + Fraction(7, 3), eps).matrix
    rep.add("commuting at two u0", tm.matrix @ other == other @ tm.matrix)
    for lam in enumerate_partitions(n):
        rep.add(f"det ratio = corner product {lam}", check_t_bridge(lam))
    return rep


SUITES = {
    "decomposition": (suite_decomposition, True),
    "appendix": (suite_appendix, True),
    "superposition": (suite_superposition, True),
    "principal": (suite_principal, True),
    "symmetry": (suite_symmetry, False),
    "integrality": (suite_integrality, False),
    "jack": (suite_jack, True),
    "transfer": (suite_transfer, True),
}


def needs_positive_point(name: str) -> bool:
    return SUITES[name][1]


def _run_one(args) -> Report:
    name, n, eps = args
    fn = SUITES[name][0]
    try:
        return fn(n, eps)
    except NSLaxError as exc:
        rep = Report(f"{name}, degree {n}")
        rep.add(f"{type(exc).__name__}", False, str(exc))
        return rep


def run_suite(name: str, max_degree: int, eps, jobs: int = 1, min_degree: int = 0) -> Report:
    """Run one suite for all degrees in [min_degree, max_degree]; results are in degree order."""
    tasks = [(name, n, eps) for n in range(min_degree, max_degree + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_one, tasks))
    else:
        parts = [_run_one(t) for t in tasks]
    rep = Report(name)
    for n, part in zip(range(min_degree, max_degree + 1), parts):
        rep.extend(part, prefix=f"n={n} ")
    return rep
