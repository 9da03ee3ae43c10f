from __future__ import annotations

from collections.abc import Sequence

import anyio
from attrs import define, field
from loguru import logger

from gpla.decide import Verdict, equal_terms, subset_terms
from gpla.utils.sync import with_limiter

from .catalog import derived_laws
from .model import CheckRow, SuiteReport
from .schema import Axiom, AxiomKind

_log = logger.bind(component="axioms")


def check_axiom(axiom: Axiom) -> Verdict:
    match axiom.kind:
        case AxiomKind.EQ:
            return equal_terms(axiom.lhs, axiom.rhs)
        case AxiomKind.LEQ:
            return subset_terms(axiom.lhs, axiom.rhs)


@define
class AxiomSuite:
    """Decide a batch of laws on worker threads, reporting in catalog order."""

    axioms: Sequence[Axiom]

    concurrency: int = 1
    """Number of laws decided at once."""

    _rows: dict[int, CheckRow] = field(init=False, factory=dict)
    _limiter: anyio.CapacityLimiter = field(init=False)

    def __attrs_post_init__(self) -> None:
        if self.concurrency < 1:
            raise ValueError("concurrency must be at least 1")
        self._limiter = anyio.CapacityLimiter(self.concurrency)

    async def run(self) -> SuiteReport:
        self._rows.clear()
        async with anyio.create_task_group() as tg:
            for idx, axiom in enumerate(self.axioms):
                tg.start_soon(self._check, idx, axiom)

        report = SuiteReport(rows=[self._rows[i] for i in range(len(self.axioms))])
        _log.info(
            "{} laws checked, {} unexpected", len(report.rows), len(report.failures)
        )
        return report

    async def _check(self, idx: int, axiom: Axiom) -> None:
        verdict = await with_limiter(self._limiter, check_axiom, axiom)()
        row = CheckRow.from_verdict(axiom, verdict)
        self._rows[idx] = row

        if row.ok:
            _log.info("{} {}: {}", axiom.label, axiom.kind, row.observed)
        else:
            _log.warning(
                "{} {}: expected {}, observed {}",
                axiom.label,
                axiom.kind,
                row.expected,
                row.observed,
            )


def check_derived_laws(concurrency: int = 1) -> SuiteReport:
    """Blocking entry point for the derived-law suite."""
    suite = AxiomSuite(derived_laws(), concurrency=concurrency)
    return anyio.run(suite.run)
