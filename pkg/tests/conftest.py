"""Shared pytest fixtures for paw-entanglement tests."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from typing import Any

import numpy as np
import pytest

from paw_entanglement.figcli.main import main


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for the fixed-count random protocols."""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_hermitian(rng: np.random.Generator) -> Callable[[int], Any]:
    """Factory for random dense Hermitian matrices of a given dimension."""

    def _make(dim: int) -> Any:
        g = rng.uniform(-2, 2, (dim, dim)) + 1j * rng.uniform(-2, 2, (dim, dim))
        return 0.5 * (g + g.conj().T)

    return _make


@pytest.fixture
def run_cli(
    capsys: pytest.CaptureFixture[str],
) -> Iterator[Callable[..., tuple[int, str, str]]]:
    """Invoke the CLI in-process and return (exit_code, stdout, stderr).

    main() reconfigures the root logger; the previous handlers and level
    are put back afterwards.
    """
    root = logging.getLogger()
    saved_handlers = root.handlers[:]
    saved_level = root.level

    def _run(*argv: str) -> tuple[int, str, str]:
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    yield _run

    for handler in root.handlers[:]:
        if handler not in saved_handlers:
            root.removeHandler(handler)
    for handler in saved_handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(saved_level)
