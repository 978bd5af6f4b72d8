import csv

import numpy as np
import pytest

from relmap.bench import BenchRecord
from relmap.errors import GridInvariantError, GridParseError
from relmap.io import parse_grid, read_grid, render_grid, write_csv, write_grid, write_pgm, write_records, write_vector


def read_pgm(path):
    data = path.read_bytes()
    magic, dims, maxval, body = data.split(b"\n", 3)
    w, h = (int(t) for t in dims.split())
    dtype = ">u2" if int(maxval) > 255 else "u1"
    return magic, int(maxval), np.frombuffer(body, dtype=dtype).reshape(h, w)


def read_records(path):
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    return [
        BenchRecord(
            r["experiment"], r["method"], float(r["param"]), float(r["metric"]), int(r["repeats"]),
            float(r["metric_min"]) if r["metric_min"] else None,
        )
        for r in rows
    ]


def test_grid_round_trip(tmp_path, rng):
    g = rng.random((5, 7))
    write_grid(tmp_path / "g.grid", g)
    back = read_grid(tmp_path / "g.grid")
    assert back.shape == (5, 7)
    assert back.tobytes() == g.tobytes()


def test_grid_round_trip_many(rng):
    for _ in range(100):
        h, w = rng.integers(1, 9, size=2)
        g = rng.random((h, w)) ** rng.uniform(0.1, 50)
        assert parse_grid(render_grid(g)).tobytes() == g.tobytes()


def test_grid_text_layout():
    text = render_grid(np.array([[0.0, 0.5], [1.0, 0.1]]))
    assert text == "RELGRID 1\n2 2\n0.0 0.5\n1.0 0.1\n"


def test_missing_values_round_trip():
    g = np.array([[np.nan, 0.25]])
    text = render_grid(g)
    assert "nan" in text
    back = parse_grid(text)
    assert np.isnan(back[0, 0]) and back[0, 1] == 0.25


@pytest.mark.parametrize(
    "text, line",
    [
        ("RELGRID 2\n1 1\n0.5\n", 1),
        ("RELGRID 1\n1 x\n0.5\n", 2),
        ("RELGRID 1\n3 3\n0 0 0\n0 0 0\n0 0\n", 5),
        ("RELGRID 1\n2 1\n0.5 abc\n", 3),
        ("RELGRID 1\n2 3\n0 0\n", 4),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GridParseError) as exc:
        parse_grid(text)
    assert exc.value.line == line


def test_range_check_and_raw():
    text = "RELGRID 1\n1 1\n1.0000001\n"
    with pytest.raises(GridInvariantError):
        parse_grid(text)
    assert parse_grid(text, raw=True)[0, 0] == 1.0000001
    assert parse_grid("RELGRID 1\n2 1\n-3.5 2e3\n", raw=True).tolist() == [[-3.5, 2000.0]]


def test_write_rejects_infinite():
    with pytest.raises(ValueError):
        render_grid(np.array([[np.inf]]))


def test_pgm_levels(tmp_path):
    write_pgm(tmp_path / "z.pgm", np.zeros((3, 4)))
    magic, maxval, px = read_pgm(tmp_path / "z.pgm")
    assert magic == b"P5" and maxval == 65535 and px.shape == (3, 4) and not px.any()
    write_pgm(tmp_path / "o.pgm", np.ones((2, 2)))
    assert (read_pgm(tmp_path / "o.pgm")[2] == 65535).all()
    write_pgm(tmp_path / "h.pgm", np.array([[0.5]]))
    assert read_pgm(tmp_path / "h.pgm")[2][0, 0] == 32768
    raw = (tmp_path / "h.pgm").read_bytes()
    assert raw.endswith(bytes([0x80, 0x00]))


def test_pgm_clamps_with_warning(tmp_path, caplog):
    write_pgm(tmp_path / "c.pgm", np.array([[-0.2, 1.7, np.nan]]))
    assert read_pgm(tmp_path / "c.pgm")[2].tolist() == [[0, 65535, 0]]
    assert "clamping" in caplog.text


def test_pgm_deterministic(tmp_path, rng):
    g = rng.random((6, 6))
    write_pgm(tmp_path / "a.pgm", g)
    write_pgm(tmp_path / "b.pgm", g)
    assert (tmp_path / "a.pgm").read_bytes() == (tmp_path / "b.pgm").read_bytes()


def test_csv_empty_and_vector(tmp_path, rng):
    write_records(tmp_path / "e.csv", [])
    assert (tmp_path / "e.csv").read_text() == "experiment,method,param,metric,repeats,metric_min\n"
    v = rng.random(100)
    write_vector(tmp_path / "v.csv", v)
    lines = (tmp_path / "v.csv").read_text().splitlines()
    assert lines[0] == "index,value" and len(lines) == 101
    assert [float(x.split(",")[1]) for x in lines[1:]] == v.tolist()


def test_records_round_trip(tmp_path):
    recs = [
        BenchRecord("sweep-p/100", "chm", 30.0, 4.2843e-4),
        BenchRecord("timing", "conv", 200.0, 0.1 + 0.2, 5, 0.1),
    ]
    write_records(tmp_path / "r.csv", recs)
    assert read_records(tmp_path / "r.csv") == recs


def test_write_csv_generic(tmp_path):
    write_csv(tmp_path / "t.csv", [(0, 0.5, 1e-300)], ["i", "a", "b"])
    assert (tmp_path / "t.csv").read_text() == "i,a,b\n0,0.5,1e-300\n"
