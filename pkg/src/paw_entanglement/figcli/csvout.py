"""Deterministic CSV datasets: header row, 12 significant digits, LF endings."""

from __future__ import annotations

import csv
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TextIO

from paw_entanglement.exceptions import PaWInternalError, ValidationError

CsvValue = float | int | str


@dataclass(frozen=True)
class Dataset:
    header: tuple[str, ...]
    rows: tuple[tuple[CsvValue, ...], ...]

    def __post_init__(self) -> None:
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise ValidationError(
                    f"row has {len(row)} values, header has {width}: {row!r}"
                )

    def column(self, name: str) -> list[CsvValue]:
        index = self.header.index(name)
        return [row[index] for row in self.rows]


def format_value(value: CsvValue) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if not math.isfinite(value):
        raise PaWInternalError(f"refusing to write non-finite value {value!r}")
    # + 0.0 folds -0.0 into 0.0
    return f"{value + 0.0:.12g}"


def write_csv(dataset: Dataset, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(dataset.header)
    for row in dataset.rows:
        writer.writerow([format_value(v) for v in row])


def make_dataset(header: Sequence[str], rows: Sequence[Sequence[CsvValue]]) -> Dataset:
    return Dataset(header=tuple(header), rows=tuple(tuple(r) for r in rows))
