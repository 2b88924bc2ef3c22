"""OracleCheck abstract base class and CheckCategory enum."""

from __future__ import annotations

from abc import ABC, abstractmethod
from enum import Enum
from typing import ClassVar, Literal

import numpy as np

from paw_entanglement.exceptions import PaWException
from paw_entanglement.report import CheckRecord


class CheckCategory(Enum):
    """Oracle check categories, defining strict execution order."""

    SMALG = "smalg"
    MODEL = "model"
    ENTANGLEMENT = "entanglement"
    PAWCLOCK = "pawclock"
    METRICS = "metrics"
    DIAGNOSTIC = "diagnostic"

    @property
    def order(self) -> int:
        _ORDER = {
            "smalg": 1,
            "model": 2,
            "entanglement": 3,
            "pawclock": 4,
            "metrics": 5,
            "diagnostic": 6,
        }
        return _ORDER[self.value]


class OracleCheck(ABC):
    """One invariant, evaluated on `samples` inputs drawn from an rng.

    Subclasses implement `measure`, returning the observed error and a
    description of the inputs. The largest error decides the outcome;
    informational checks always report INFO.
    """

    category: ClassVar[CheckCategory]
    name: ClassVar[str]
    samples: ClassVar[int] = 100
    tolerance: ClassVar[float] = 1e-10
    informational: ClassVar[bool] = False

    @abstractmethod
    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]: ...

    def run(self, rng: np.random.Generator) -> CheckRecord:
        worst_error = 0.0
        worst_inputs = ""
        for index in range(self.samples):
            try:
                error, inputs = self.measure(rng, index)
            except PaWException as exc:
                return self._record(float("inf"), index, f"raised {exc!s}")
            if not error <= worst_error:
                worst_error, worst_inputs = error, inputs
        return self._record(worst_error, self.samples, worst_inputs)

    def _record(self, max_error: float, samples: int, inputs: str) -> CheckRecord:
        outcome: Literal["PASS", "FAIL", "INFO"]
        if self.informational:
            outcome = "INFO"
        elif max_error <= self.tolerance:
            outcome = "PASS"
        else:
            outcome = "FAIL"
        return CheckRecord(
            name=self.name,
            category=self.category.value,
            samples=samples,
            max_error=max_error,
            tolerance=self.tolerance,
            outcome=outcome,
            inputs=inputs if outcome != "PASS" else None,
        )
