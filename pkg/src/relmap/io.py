"""Text grid files, 16-bit PGM images and CSV tables.

Grid file layout::

    RELGRID 1
    <width> <height>
    <height lines of width space-separated reals>

Reals are written in their shortest round-trip form (``repr``) so reading a
written grid gives back the same float64 values bit for bit. Missing values
are written as ``nan``.
"""
import csv
import dataclasses
import logging
from pathlib import Path

import numpy as np

from .errors import GridInvariantError, GridParseError

__all__ = [
    "MAGIC",
    "render_grid",
    "parse_grid",
    "write_grid",
    "read_grid",
    "write_pgm",
    "format_real",
    "write_csv",
    "write_records",
    "write_vector",
]

log = logging.getLogger(__name__)

MAGIC = "RELGRID 1"


def format_real(v):
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    if isinstance(v, str):
        return v
    return repr(float(v))


def render_grid(grid):
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 2:
        raise ValueError(f"expected a 2D grid, got shape {grid.shape}")
    if np.isinf(grid).any():
        raise ValueError("grid values must be finite (nan marks a missing value)")
    h, w = grid.shape
    lines = [MAGIC, f"{w} {h}"]
    lines.extend(" ".join(repr(float(v)) for v in row) for row in grid)
    return "\n".join(lines) + "\n"


def parse_grid(text, raw=False):
    """Parse grid-file text; ``raw=True`` skips the [0, 1] range check."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != MAGIC:
        raise GridParseError(f"expected header {MAGIC!r}", 1)
    if len(lines) < 2:
        raise GridParseError("missing dimensions line", 2)
    dims = lines[1].split()
    try:
        w, h = (int(t) for t in dims)
    except ValueError:
        raise GridParseError(f"malformed dimensions {lines[1]!r}", 2) from None
    if w < 1 or h < 1:
        raise GridParseError(f"dimensions must be >= 1, got {w}x{h}", 2)
    body = lines[2:]
    if len(body) != h:
        raise GridParseError(f"expected {h} rows, found {len(body)}", 2 + min(len(body), h) + 1)
    out = np.empty((h, w))
    for r, line in enumerate(body):
        lineno = r + 3
        tokens = line.split()
        if len(tokens) != w:
            raise GridParseError(f"expected {w} values, found {len(tokens)}", lineno)
        for c, tok in enumerate(tokens):
            try:
                out[r, c] = float(tok)
            except ValueError:
                raise GridParseError(f"non-numeric token {tok!r}", lineno) from None
    if not raw:
        present = out[~np.isnan(out)]
        if not ((present >= 0.0) & (present <= 1.0)).all():
            raise GridInvariantError("grid values outside [0, 1]; read with raw=True to allow")
    return out


def write_grid(path, grid):
    Path(path).write_text(render_grid(grid), encoding="ascii")


def read_grid(path, raw=False):
    return parse_grid(Path(path).read_text(encoding="ascii"), raw=raw)


def write_pgm(path, grid, levels=65535):
    """Binary PGM with ``round(v * levels)`` samples, big-endian when 16-bit.

    Values outside [0, 1] are clamped and missing (NaN) values written as 0,
    with a warning in either case.
    """
    if not 1 <= levels <= 65535:
        raise ValueError(f"levels must be in [1, 65535], got {levels}")
    grid = np.asarray(grid, dtype=np.float64)
    h, w = grid.shape
    if np.isnan(grid).any():
        log.warning("write_pgm: %s has missing values, written as 0", path)
        grid = np.nan_to_num(grid, nan=0.0)
    if (grid < 0).any() or (grid > 1).any():
        log.warning("write_pgm: %s has values outside [0, 1], clamping", path)
        grid = np.clip(grid, 0.0, 1.0)
    samples = np.floor(grid * levels + 0.5)
    dtype = ">u2" if levels > 255 else "u1"
    header = f"P5\n{w} {h}\n{levels}\n".encode("ascii")
    Path(path).write_bytes(header + samples.astype(dtype).tobytes())


def write_csv(path, rows, header):
    with open(path, "w", newline="", encoding="ascii") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_real(v) for v in row])


def write_records(path, records):
    """CSV of :class:`relmap.bench.BenchRecord` rows."""
    from .bench import BenchRecord

    header = [f.name for f in dataclasses.fields(BenchRecord)]
    write_csv(path, ([getattr(r, name) for name in header] for r in records), header)


def write_vector(path, values, header=("index", "value")):
    write_csv(path, ((i, float(v)) for i, v in enumerate(values)), header)
