"""Deterministic CSV emission: stable schema, stable float formatting."""

from __future__ import annotations

import csv
import hashlib
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_csv(
    path: Union[str, Path],
    fieldnames: Sequence[str],
    rows: Iterable[Mapping[str, object]],
) -> str:
    """Write rows in the fixed column order; returns the file's sha256."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            unknown = set(row) - set(fieldnames)
            if unknown:
                raise ValueError(f"row has columns outside the schema: {sorted(unknown)}")
            writer.writerow([format_value(row.get(name)) for name in fieldnames])
    return sha256_file(path)


def sha256_file(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def read_csv(path: Union[str, Path]) -> list[dict[str, str]]:
    with Path(path).open(newline="") as fh:
        return list(csv.DictReader(fh))
