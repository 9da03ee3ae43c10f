from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Final

from cyclopts import App
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from gpla.axioms import (
    DEFAULT_SCALARS,
    AxiomSuite,
    SuiteReport,
    all_axioms,
    derived_laws,
    negative_controls,
)
from gpla.circuits import CircuitError, parse_circuit, solve
from gpla.decide import Fails, Holds, Verdict, equal, subset
from gpla.logging import setup_logging
from gpla.normalform import pl_nf
from gpla.polyhedron import DimensionMismatch
from gpla.semantics import ArityMismatch, PLRelation, RelationDocument, evaluate, member
from gpla.term import TermError, parse

app = App(name="gpla", help="Exact decision engine for graphical piecewise-linear algebra.")

EXIT_HOLDS: Final = 0
EXIT_FAILS: Final = 1
EXIT_INVALID: Final = 2

DEFAULT_LOG_LEVEL: Final = "WARNING"

_out: Final = Console()
_err: Final = Console(stderr=True)


@contextmanager
def _invalid_input() -> Iterator[None]:
    """Report malformed input on stderr and exit with status 2."""
    try:
        yield
    except (
        TermError,
        CircuitError,
        ArityMismatch,
        DimensionMismatch,
        ValidationError,
        OSError,
        ValueError,
    ) as e:
        _err.print(f"[bold red]error:[/] {e}", highlight=False)
        raise SystemExit(EXIT_INVALID) from e


def _read(source: str, *, text: bool) -> str:
    return source if text else Path(source).read_text(encoding="utf-8")


def _load(source: str, *, text: bool) -> PLRelation:
    """A relation from term text, or from a serialized document ending in `.json`."""
    if not text and Path(source).suffix == ".json":
        return RelationDocument.model_validate_json(_read(source, text=False)).to_relation()
    return evaluate(parse(_read(source, text=text)))


def _render_point(x: tuple[Fraction, ...]) -> str:
    return "(" + ", ".join(str(v) for v in x) + ")"


def _report(verdict: Verdict) -> None:
    match verdict:
        case Holds():
            _out.print("[green]holds[/]")
            raise SystemExit(EXIT_HOLDS)
        case Fails(counterexample=x):
            _out.print(f"[red]fails[/] at {_render_point(x)}", highlight=False)
            raise SystemExit(EXIT_FAILS)


@app.command(name="eval")
def eval_(source: str, *, text: bool = False, log_level: str = DEFAULT_LOG_LEVEL) -> None:
    """
    Print the relation denoted by a term as a JSON document.

    Parameters
    ----------
    source
        Term file, or the term itself with `--text`.
    text
        Read `source` as inline term text.
    log_level
        Minimum level of log lines written to stderr.
    """
    setup_logging(log_level)
    with _invalid_input():
        rel = _load(source, text=text)
    _out.print_json(RelationDocument.from_relation(rel).model_dump_json())


@app.command
def nf(source: str, *, text: bool = False, log_level: str = DEFAULT_LOG_LEVEL) -> None:
    """Print the normal form of a term: hyperplanes, then one sign string per cell."""
    setup_logging(log_level)
    with _invalid_input():
        form = pl_nf(_load(source, text=text))
    _out.print(form.render(), highlight=False)


@app.command
def leq(
    lhs: str, rhs: str, *, text: bool = False, log_level: str = DEFAULT_LOG_LEVEL
) -> None:
    """Decide whether the left relation is contained in the right one."""
    setup_logging(log_level)
    with _invalid_input():
        verdict = subset(_load(lhs, text=text), _load(rhs, text=text))
    _report(verdict)


@app.command
def eq(
    lhs: str, rhs: str, *, text: bool = False, log_level: str = DEFAULT_LOG_LEVEL
) -> None:
    """Decide whether two relations are equal."""
    setup_logging(log_level)
    with _invalid_input():
        verdict = equal(_load(lhs, text=text), _load(rhs, text=text))
    _report(verdict)


@app.command(name="member")
def member_(
    source: str, *point: str, text: bool = False, log_level: str = DEFAULT_LOG_LEVEL
) -> None:
    """
    Test a rational point, left ports then right ports, for membership.

    Negative coordinates go after `--`.
    """
    setup_logging(log_level)
    with _invalid_input():
        rel = _load(source, text=text)
        x = tuple(Fraction(v) for v in point)
        found = member(x, rel)
    _out.print("[green]member[/]" if found else "[red]not a member[/]")
    raise SystemExit(EXIT_HOLDS if found else EXIT_FAILS)


def _render_report(report: SuiteReport) -> Table:
    table = Table(title="axioms")
    for column in ("law", "scalars", "kind", "expected", "observed", "counterexample"):
        table.add_column(column)
    for row in report.rows:
        style = None if row.ok else "bold red"
        table.add_row(
            f"{row.name} ({row.variant})" if row.variant else row.name,
            ", ".join(row.scalars),
            row.kind.value,
            row.expected,
            row.observed,
            "(" + ", ".join(row.counterexample) + ")" if row.counterexample else "",
            style=style,
        )
    return table


@app.command(name="axioms-check")
async def axioms_check(
    *,
    scalars: str | None = None,
    concurrency: int = 4,
    derived: bool = False,
    log_level: str = DEFAULT_LOG_LEVEL,
) -> None:
    """
    Decide every axiom instance and the negative controls.

    Parameters
    ----------
    scalars
        Comma-separated rationals at which scalar families are sampled.
    concurrency
        Number of laws decided at once.
    derived
        Also check the derived laws and library identities.
    log_level
        Minimum level of log lines written to stderr.
    """
    setup_logging(log_level)
    with _invalid_input():
        samples = (
            tuple(Fraction(s) for s in scalars.split(","))
            if scalars
            else DEFAULT_SCALARS
        )
        laws = [*all_axioms(samples), *negative_controls()]
        if derived:
            laws.extend(derived_laws())
        suite = AxiomSuite(laws, concurrency=concurrency)

    report = await suite.run()
    _out.print(_render_report(report))
    raise SystemExit(EXIT_HOLDS if report.ok else EXIT_FAILS)


@app.command(name="circuit-solve")
def circuit_solve(
    source: str, *, text: bool = False, log_level: str = DEFAULT_LOG_LEVEL
) -> None:
    """Compile a circuit and print its exact behaviour as a JSON document."""
    setup_logging(log_level)
    with _invalid_input():
        rel = solve(parse_circuit(_read(source, text=text)))
    _out.print_json(RelationDocument.from_relation(rel).model_dump_json())
