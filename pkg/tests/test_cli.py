import subprocess
import sys

import pytest

from graphtopo.classification import enumerate_compressed
from graphtopo.cli import main
from graphtopo.graph import complete, cycle, octahedron, read_graph, write_graph
from graphtopo.invariants import homology
from graphtopo.transforms import Trace, replay, validate


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("k4", complete(4)), ("c4", cycle(4)), ("c6", cycle(6)), ("oct", octahedron())]:
        p = tmp_path / f"{name}.txt"
        write_graph(g, p)
        paths[name] = str(p)
    a, b = [g for g in enumerate_compressed(6) if homology(g).euler == -2]
    for name, g in (("ga", a), ("gb", b)):
        p = tmp_path / f"{name}.txt"
        write_graph(g, p)
        paths[name] = str(p)
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3\ne 0 9\n")
    paths["bad"] = str(bad)
    shape = tmp_path / "circle.shape"
    shape.write_text("shape circle\nparam radius 1\nparam L 0.25\n")
    paths["circle"] = str(shape)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_contractible(capsys, files, tmp_path):
    trace = tmp_path / "t.txt"
    assert run(capsys, "contractible", files["k4"], "--trace", str(trace))[:2] == (0, "CONTRACTIBLE\n")
    assert trace.read_text() == "DP 0\nDP 1\nDP 2\n"
    assert run(capsys, "contractible", files["c4"])[:2] == (0, "NOT-CONTRACTIBLE\n")


def test_parse_error_exit_one(capsys, files):
    code, out, err = run(capsys, "contractible", files["bad"])
    assert code == 1 and "line 2" in err
    assert run(capsys, "invariants", "/nonexistent/file")[0] == 1


def test_compress_with_trace(capsys, files, tmp_path):
    trace = tmp_path / "t.txt"
    code, out, _ = run(capsys, "compress", files["c6"], "--trace", str(trace))
    assert code == 0 and out.startswith("p 4\n")
    t = Trace.from_text(cycle(6), trace.read_text())
    assert validate(t) == (True, None)


def test_invariants(capsys, files):
    assert run(capsys, "invariants", files["oct"])[1] == "chi=2 betti=[1,0,1] torsion=[[],[],[]]\n"


def test_equiv(capsys, files, tmp_path):
    trace = tmp_path / "w.txt"
    code, out, _ = run(capsys, "equiv", files["c4"], files["c6"], "--trace", str(trace))
    assert code == 0 and out.startswith("EQUIVALENT\n")
    t = Trace.from_text(cycle(4), trace.read_text())
    assert validate(t) == (True, None) and replay(t).order == 6
    code, out, _ = run(capsys, "equiv", files["c4"], files["oct"])
    assert (code, out) == (0, "DISTINCT euler 0 2\n")
    code, out, _ = run(capsys, "equiv", files["ga"], files["gb"], "--budget", "1")
    assert code == 2 and out.startswith("UNKNOWN budget=")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--order", "4")
    lines = out.splitlines()
    assert code == 0 and "N=1: 1 classes" in lines and "N=4: 1 classes" in lines


def test_classify_threads_and_format_stable(capsys):
    one = run(capsys, "classify", "--order", "6", "--threads", "1")[1]
    two = run(capsys, "classify", "--order", "6", "--threads", "2")[1]
    assert one == two
    human = run(capsys, "classify", "--order", "4", "--format", "human")[1]
    assert "N=4: 1 classes" in [" ".join(line.split()) for line in human.splitlines()]
    assert human != run(capsys, "classify", "--order", "4")[1]


def test_basic_of(capsys, files):
    code, out, _ = run(capsys, "basic-of", files["c6"])
    assert code == 0 and out.startswith("complexity=4 weight=4\n")


def test_rasterize(capsys, files, tmp_path):
    cells = tmp_path / "cells.txt"
    expect = tmp_path / "c4.txt"
    write_graph(cycle(4), expect)
    code, out, _ = run(capsys, "rasterize", files["circle"], "--cells", str(cells), "--expect", str(expect))
    assert code == 0
    assert out.startswith("chi=0 betti=[1,1] torsion=[[],[]]\nbasic=")
    assert "expected=yes" in out
    assert all(len(line.split()) == 2 for line in cells.read_text().splitlines())


def test_rasterize_needs_cell_size(capsys, tmp_path):
    p = tmp_path / "d.shape"
    p.write_text("shape disk\n")
    assert run(capsys, "rasterize", str(p))[0] == 1
    assert run(capsys, "rasterize", str(p), "--cell-size", "0.5")[0] == 0


def test_curves_and_simple_connectivity(capsys, files):
    code, out, _ = run(capsys, "curves", files["oct"])
    assert code == 0 and len(out.splitlines()) == 4
    assert run(capsys, "curves", files["c6"], "--max-len", "5")[0] == 2
    assert run(capsys, "simply-connected", files["c4"])[:2] == (0, "NO\n")
    assert run(capsys, "simply-connected", files["oct"])[:2] == (0, "YES\n")


def test_output_file(capsys, files, tmp_path):
    out = tmp_path / "o.txt"
    assert run(capsys, "invariants", files["k4"], "-o", str(out))[1] == ""
    assert out.read_text().startswith("chi=1 ")


def test_entry_point_runs():
    res = subprocess.run(
        [sys.executable, "-m", "graphtopo.cli", "--version"], capture_output=True, text=True
    )
    assert res.returncode == 0 and "graphtopo" in res.stdout


def test_bad_flag_value(files):
    with pytest.raises(SystemExit) as exc:
        main(["equiv", files["c4"], files["c6"], "--budget", "0"])
    assert exc.value.code == 2
