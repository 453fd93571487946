"""Reproducible inverse-CDF sampling and plain-text sample ingestion.

The uniform source is numpy's PCG64 pinned by seed; raw 64-bit outputs are
mapped to the open interval (0, 1) as (top53bits + 0.5) / 2^53 so the log in
the inverse transform never sees 0 or 1.  The text format is one value per
line (optional single header line; comma or whitespace delimited columns),
written with 17 significant digits for lossless round trips.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DomainError, EmptyInputError, ParseError
from .frechet import FrechetParams

__all__ = ["SamplerConfig", "sample", "read_samples", "write_samples"]


@dataclass(frozen=True)
class SamplerConfig:
    """Deterministic sampling request: equal configs give identical output."""

    seed: int
    count: int
    params: FrechetParams

    def __post_init__(self):
        if self.count < 1:
            raise DomainError(f"count must be >= 1, got {self.count!r}")
        if not (0 <= self.seed < 2**64):
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


def sample(config: SamplerConfig) -> np.ndarray:
    """Draw `count` values via x = m + s * (-ln u)^(-1/alpha), u uniform in (0,1)."""
    rng = np.random.Generator(np.random.PCG64(config.seed))
    bits = rng.integers(0, 2**64, size=config.count, dtype=np.uint64)
    u = ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    p = config.params
    return p.location + p.scale * (-np.log(u)) ** (-1.0 / p.alpha)


def _split(line: str) -> list[str]:
    return [t for t in (line.split(",") if "," in line else line.split()) if t.strip()]


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def read_samples(path: Union[str, Path], column: Optional[str] = None) -> list[float]:
    """Parse one value per line, or the named column of a delimited file.

    A first line containing any non-numeric token is treated as a header.
    Blank lines are skipped; any other non-numeric token raises ParseError
    with its line number.
    """
    text = Path(path).read_text()
    lines = text.splitlines()
    values: list[float] = []
    col_index = 0
    header_seen = False
    for lineno, line in enumerate(lines, start=1):
        tokens = _split(line)
        if not tokens:
            continue
        if not values and not header_seen and any(not _is_number(t) for t in tokens):
            header = [t.strip() for t in tokens]
            if column is not None:
                if column not in header:
                    raise ParseError(f"column {column!r} not found in header {header}", lineno)
                col_index = header.index(column)
            header_seen = True
            continue
        if column is not None and not header_seen:
            raise ParseError(f"column {column!r} requested but file has no header", lineno)
        if col_index >= len(tokens):
            raise ParseError(f"line {lineno} has only {len(tokens)} column(s)", lineno)
        token = tokens[col_index].strip()
        if not _is_number(token):
            raise ParseError(f"non-numeric value {token!r} at line {lineno}", lineno)
        values.append(float(token))
    if not values:
        raise EmptyInputError(f"no data values found in {path}")
    return values


def write_samples(path: Union[str, Path], values: Sequence[float]) -> None:
    """Write one value per line with 17 significant digits (round-trip exact)."""
    with open(path, "w") as fh:
        for v in values:
            fh.write(format(float(v), ".17g"))
            fh.write("\n")
