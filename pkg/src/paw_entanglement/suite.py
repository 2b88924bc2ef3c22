"""VerifySuite: ordered container and runner for OracleChecks."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from paw_entanglement.checks import OracleCheck
from paw_entanglement.report import VerifyReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResolvedSuite:
    """Immutable, pre-computed execution plan."""

    checks: tuple[OracleCheck, ...]


class VerifySuite:
    """Ordered container of OracleCheck instances."""

    def __init__(self, *checks: OracleCheck) -> None:
        self._checks = checks
        self._resolved: ResolvedSuite | None = None

    def resolve(self) -> ResolvedSuite:
        if self._resolved is None:
            self._resolved = ResolvedSuite(
                checks=tuple(sorted(self._checks, key=lambda c: c.category.order))
            )
        return self._resolved

    def run(self, seed: int) -> VerifyReport:
        """Run every check with its own child stream of `seed`."""
        resolved = self.resolve()
        streams = np.random.SeedSequence(seed).spawn(len(resolved.checks))
        report = VerifyReport(seed=seed)
        for check, stream in zip(resolved.checks, streams, strict=True):
            record = check.run(np.random.default_rng(stream))
            logger.info(
                "%s %s max_error=%.3e", record.outcome, record.name, record.max_error
            )
            report.records.append(record)
        return report
