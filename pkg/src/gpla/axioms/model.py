from __future__ import annotations

from pydantic import BaseModel, Field

from gpla.decide import Fails, Verdict

from .schema import Axiom, AxiomKind, Outcome


class CheckRow(BaseModel):
    name: str
    variant: str | None = None
    scalars: list[str] = Field(default_factory=list)
    kind: AxiomKind
    expected: Outcome
    observed: Outcome

    counterexample: list[str] | None = None
    """The witnessing point, as rational strings, when `observed` is `fails`."""

    @classmethod
    def from_verdict(cls, axiom: Axiom, verdict: Verdict) -> CheckRow:
        match verdict:
            case Fails(counterexample=x):
                observed, point = "fails", [str(v) for v in x]
            case _:
                observed, point = "holds", None
        return cls(
            name=axiom.name,
            variant=axiom.variant,
            scalars=[str(r) for r in axiom.scalars],
            kind=axiom.kind,
            expected=axiom.expected,
            observed=observed,
            counterexample=point,
        )

    @property
    def ok(self) -> bool:
        return self.observed == self.expected


class SuiteReport(BaseModel):
    rows: list[CheckRow] = Field(default_factory=list)

    @property
    def failures(self) -> list[CheckRow]:
        return [row for row in self.rows if not row.ok]

    @property
    def ok(self) -> bool:
        return not self.failures
