"""Command-line interface.

Rationals are passed as ``num/den`` strings (a bare integer is also fine);
decimal and float notation is rejected.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import click

from nslax import cache
from nslax.eigenanalysis import symbolic_psi, symbolic_psi_table
from nslax.errors import DegenerateParameterError, NSLaxError
from nslax.exactalg import format_rational, parse_rational
from nslax.fock import basis, monomial_str
from nslax.jack import compute_jacks
from nslax.lax import check_self_adjoint, lax_matrix
from nslax.partitions import Partition, corners, enumerate_partitions
from nslax.spectral import build_cyclic, spectrum_table
from nslax.suites import needs_positive_point, run_suite

ALL_SUITES = ["decomposition", "appendix", "superposition", "principal", "symmetry", "integrality", "jack", "transfer"]


class RationalType(click.ParamType):
    name = "num/den"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            self.fail(f"{value!r} is not an exact rational: {exc}", param, ctx)


RATIONAL = RationalType()


def _partition(ctx, param, value):
    if value is None:
        return None
    try:
        return Partition.parse(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc


def _cell(ctx, param, value):
    if value is None:
        return None
    try:
        c, r = (int(t) for t in value.split(","))
    except ValueError as exc:
        raise click.BadParameter(f"expected c,r but got {value!r}") from exc
    return (c, r)


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _require_positive(eps) -> None:
    e1, e2 = eps
    if not (e1 > 0 > e2):
        raise click.UsageError(f"this command needs e1 > 0 > e2 (real ebar, hbar > 0); got ({e1}, {e2})")


eps_option = click.option(
    "--eps", "eps", type=RATIONAL, nargs=2, default=None, metavar="E1 E2", help="Specialization point (e1, e2)."
)
output_option = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write to a file.")


class LibraryErrorGroup(click.Group):
    """Turns library errors into clean messages and nonzero exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except DegenerateParameterError as exc:
            raise _Failure(f"degenerate parameters: {exc}", 2) from exc
        except NSLaxError as exc:
            raise _Failure(f"error: {exc}", 3) from exc


class _Failure(click.ClickException):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.exit_code = code

    def format_message(self) -> str:
        return self.message


@click.group(cls=LibraryErrorGroup)
@click.option(
    "--cache-dir",
    type=click.Path(file_okay=False),
    envvar=cache.CACHE_ENV,
    default=None,
    help=f"Cache directory (default ~/.cache/nslax, or ${cache.CACHE_ENV}).",
)
@click.pass_context
def main(ctx, cache_dir):
    """Exact computations with the Nazarov-Sklyanin Lax operator."""
    ctx.obj = {"cache_dir": Path(cache_dir) if cache_dir else cache.default_cache_dir()}


@main.command()
@click.option("--n", "n", type=click.IntRange(0), required=True, help="Degree.")
@eps_option
@output_option
@click.pass_context
def jack(ctx, n, eps, output):
    """Jack characters of degree n (symbolic), or the Jack polynomials at --eps."""
    if eps is None:
        table = cache.cached_jack_characters(n, ctx.obj["cache_dir"])
        _emit(cache.dumps(table.to_json()), output)
        return
    table = compute_jacks(n, *eps)
    data = {
        "n": n,
        "eps": [format_rational(e) for e in eps],
        "jacks": [{"lambda": list(lam), "j": v.to_json()} for lam, v in table.items()],
    }
    _emit(cache.dumps(data), output)


@main.command()
@click.option("--lambda", "lam", callback=_partition, required=True, help="Partition, e.g. 2,1.")
@click.option("--cell", "cell", callback=_cell, default=None, help="Addable corner c,r (default: all).")
@click.option("--symbolic", is_flag=True, help="Coefficients as polynomials in e1, e2.")
@eps_option
@output_option
@click.pass_context
def psi(ctx, lam, cell, symbolic, eps, output):
    """Eigenfunctions psi_lambda^s, symbolic or at a point."""
    addable = corners(lam).addable
    if cell is not None and cell not in addable:
        raise click.BadParameter(f"{cell} is not an addable corner of {lam}; choose from {list(addable)}")
    cells = [cell] if cell is not None else list(addable)
    if symbolic == (eps is not None):
        raise click.UsageError("give exactly one of --symbolic or --eps")
    if symbolic:
        items = [symbolic_psi(lam, s).to_json() for s in cells]
    else:
        _require_positive(eps)
        payload = cache.cached_eigensystems(lam.size, eps, ctx.obj["cache_dir"])
        sysd = next(sy for sy in payload["systems"] if Partition(sy["lambda"]) == lam)
        items = [dict(e, **{"lambda": list(lam)}) for e in sysd["eigenfunctions"] if tuple(e["cell"]) in cells]
    _emit(cache.dumps(items[0] if len(items) == 1 else items), output)


@main.command()
@click.option("--n", "n", type=click.IntRange(0), required=True)
@eps_option
@click.option("--json", "as_json", is_flag=True, help="JSON instead of a text table.")
@output_option
def spectrum(n, eps, as_json, output):
    """Eigenvalues of L on F[w]_n with their corners and transition weights."""
    if eps is None:
        raise click.UsageError("--eps E1 E2 is required")
    _require_positive(eps)
    rows = spectrum_table(n, *eps)
    for lam in enumerate_partitions(n):
        build_cyclic(lam, *eps)  # certifies dim Z = |A| and distinct contents
    if as_json:
        data = {
            "n": n,
            "eps": [format_rational(e) for e in eps],
            "eigenvalues": [
                {
                    "lambda": list(r.lam),
                    "cell": list(r.cell),
                    "eigenvalue": format_rational(r.content),
                    "weight": format_rational(r.weight),
                }
                for r in rows
            ],
        }
        _emit(cache.dumps(data), output)
        return
    table = [("lambda", "cell", "eigenvalue", "weight")]
    table += [(str(r.lam), f"{r.cell[0]},{r.cell[1]}", format_rational(r.content), format_rational(r.weight)) for r in rows]
    widths = [max(len(t[i]) for t in table) for i in range(4)]
    lines = ["  ".join(t[i].ljust(widths[i]) for i in range(4)).rstrip() for t in table]
    _emit("\n".join(lines) + "\n", output)


@main.command()
@click.option("--n", "n", type=click.IntRange(0), required=True)
@eps_option
@click.option("--dump-matrix", is_flag=True, help="Print the matrix as JSON.")
@output_option
def lax(n, eps, dump_matrix, output):
    """The Lax operator on F[w]_n (symbolic without --eps)."""
    M = lax_matrix(n, eps)
    if dump_matrix:
        _emit(cache.dumps(M.to_json()), output)
        return
    lines = [f"dim F[w]_{n} = {M.dim}"]
    if eps is not None:
        lines.append(f"self-adjoint: {check_self_adjoint(M)}")
    _emit("\n".join(lines) + "\n", output)


@main.command()
@click.option("--suite", type=click.Choice(ALL_SUITES + ["all"]), default="all", show_default=True)
@click.option("--max-degree", type=click.IntRange(0), default=4, show_default=True)
@click.option("--eps", "eps", type=RATIONAL, nargs=2, default=("2", "-3"), show_default=True, metavar="E1 E2")
@click.option("--jobs", type=click.IntRange(1), default=1, show_default=True, help="Worker processes.")
@click.option("--ledger", type=click.Path(dir_okay=False), default=None, help="Integrality ledger path.")
@click.option("--verbose", "-v", is_flag=True, help="List every check, not only failures.")
@click.pass_context
def verify(ctx, suite, max_degree, eps, jobs, ledger, verbose):
    """Run verification suites; exit status 0 iff every check passes."""
    names = ALL_SUITES if suite == "all" else [suite]
    if any(needs_positive_point(s) for s in names):
        _require_positive(eps)
    all_ok = True
    for name in names:
        rep = run_suite(name, max_degree, eps, jobs=jobs)
        for c in rep.checks:
            if verbose or not c.passed:
                mark = "ok  " if c.passed else "FAIL"
                click.echo(f"{mark} {name}: {c.name}" + (f"  [{c.detail}]" if c.detail and not c.passed else ""))
        click.echo(f"{'PASS' if rep.ok else 'FAIL'} {rep.summary()}")
        if name == "integrality":
            path = Path(ledger) if ledger else ctx.obj["cache_dir"] / "integrality_ledger.json"
            cache.write_json_atomic(path, {"max_degree": max_degree, "pass": rep.ok, "entries": rep.data})
            click.echo(f"integrality ledger written to {path}")
        all_ok &= rep.ok
    ctx.exit(0 if all_ok else 1)


def _term_str(coeff, mu, l) -> str:
    mono = monomial_str(mu, l)
    cs = str(coeff)
    if len(coeff.terms) > 1:
        cs = f"({cs})"
    if coeff == 1:
        return mono
    return f"{cs}*{mono}" if mono != "1" else cs


def psi_formula(lam, s) -> tuple[str, str]:
    """Left and right sides of the formula psi_lambda^s = j_lambda + (w-terms)."""
    P = symbolic_psi(lam, s)
    left = f"psi[{','.join(map(str, lam)) or '0'}]^({s[0]},{s[1]})"
    jack_name = f"j[{','.join(map(str, lam)) or '0'}]"
    terms = []
    # w-power ascending; within one power, more parts first
    for mu, l in sorted(basis(P.n), key=lambda idx: (idx[1], -len(idx[0]), idx[0])):
        if l == 0:
            continue
        c = P.coeffs.get((mu, l))
        if c is not None:
            terms.append(_term_str(c, mu, l))
    right = " + ".join([jack_name] + terms)
    return left, right


@main.command()
@click.option("--max-degree", type=click.IntRange(0), default=3, show_default=True)
@output_option
def table(max_degree, output):
    """Aligned text table of the symbolic eigenfunctions up to a degree."""
    rows = []
    for n in range(max_degree + 1):
        for lam, s in symbolic_psi_table(n):
            rows.append(psi_formula(lam, s))
    width = max(len(lhs) for lhs, _ in rows)
    _emit("".join(f"{lhs.rjust(width)} = {rhs}\n" for lhs, rhs in rows), output)


if __name__ == "__main__":
    main()
