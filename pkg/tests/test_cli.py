import os
import subprocess
import sys

import numpy as np
import pytest

from rtview import Order, View, create, from_values, from_view
from rtview.cli import run
from rtview.elementwise_ops import ew_binary
from rtview.tensor_io import encode, load, save


def entries(t):
    return t.shape, t.order, t.kind, t.to_numpy().tolist()


@pytest.fixture
def t324(tmp_path):
    path = tmp_path / "t.mtf"
    save(path, from_values(np.arange(24.0), (3, 2, 4)))
    return path


def test_new_and_info(tmp_path, capsys):
    out = tmp_path / "n.mtf"
    assert run(["new", "--shape", "3,2,4", "--fill", "1.5", "--order", "fcmo", "--kind", "f32", str(out)]) == 0
    t = load(out)
    assert t.shape == (3, 2, 4) and t.order is Order.FCMO and t.kind == np.float32
    assert set(t.values().tolist()) == {1.5}
    capsys.readouterr()
    assert run(["info", str(out)]) == 0
    assert capsys.readouterr().out == "dimension: 3\nshape: 3,2,4\norder: fcmo\nkind: f32\nsize: 24\n"


def test_new_defaults(tmp_path):
    out = tmp_path / "n.mtf"
    assert run(["new", "--shape", "2", str(out)]) == 0
    t = load(out)
    assert t.order is Order.LCMO and t.kind == np.float64 and t.values().tolist() == [0.0, 0.0]


def test_print_v6(tmp_path, capsys, sample_buffer):
    path = tmp_path / "v6.mtf"
    save(path, View(sample_buffer, (3,), (2,), 101))
    assert run(["print", str(path)]) == 0
    assert capsys.readouterr().out == "2 4 6\n"
    assert run(["print", str(path), "--style", "table"]) == 0
    assert capsys.readouterr().out == "0  2\n1  4\n2  6\n"


def test_shift(tmp_path):
    src, out = tmp_path / "a.mtf", tmp_path / "b.mtf"
    save(src, from_values(np.arange(42), (2, 3, 7)))
    assert run(["shift", str(src), "--by", "1", str(out)]) == 0
    assert load(out).shape == (7, 2, 3)
    assert run(["shift", str(src), "--by", "-1", str(out)]) == 0
    assert load(out).shape == (3, 7, 2)
    assert entries(load(out)) == entries(from_view(load(src).shifted_view(-1)))


def test_reshape_size_mismatch(t324, tmp_path, capsys):
    out = tmp_path / "o.mtf"
    assert run(["reshape", str(t324), "--shape", "5,5", str(out)]) == 4
    assert "SizeMismatch" in capsys.readouterr().err
    assert not out.exists()


@pytest.mark.parametrize("argv,op", [
    (["reshape", "--shape", "2,2,3,2"], lambda t: t.reshape((2, 2, 3, 2))),
    (["resize", "--shape", "4,2,4,2", "--fill", "-1"], lambda t: t.resize((4, 2, 4, 2), -1.0)),
    (["permute", "--perm", "1,0,2"], lambda t: from_view(t.permuted_view((1, 0, 2)))),
    (["transpose", "--axes", "0,2"], lambda t: from_view(t.transposed_view(0, 2))),
    (["transpose"], lambda t: from_view(t.transposed_view())),
    (["slice", "--base", "1,1,0", "--shape", "2,1,3"], lambda t: from_view(t.view((1, 1, 0), (2, 1, 3)))),
    (["slice", "--base", "1,1,0", "--shape", "2,1,3", "--squeeze"],
     lambda t: from_view(t.view((1, 1, 0), (2, 1, 3)).squeezed_view())),
    (["bind", "--axis", "2", "--at", "3"], lambda t: from_view(t.bound_view(2, 3))),
])
def test_matches_library(t324, tmp_path, argv, op):
    out = tmp_path / "o.mtf"
    cmd = argv[:1] + [str(t324)] + argv[1:] + [str(out)]
    assert run(cmd) == 0
    expected = op(load(t324))
    assert entries(load(out)) == entries(expected)
    assert load(out).data.tobytes() == from_view(expected).data.tobytes()


@pytest.mark.parametrize("op", ["add", "sub", "mul", "div"])
def test_binop(tmp_path, op):
    a, b, out = tmp_path / "a.mtf", tmp_path / "b.mtf", tmp_path / "o.mtf"
    ta = from_values(np.arange(1.0, 7.0), (2, 3))
    tb = from_values(np.arange(6.0, 0.0, -1.0), (2, 3), order=Order.FCMO)
    save(a, ta)
    save(b, tb)
    assert run(["binop", op, str(a), str(b), str(out)]) == 0
    assert entries(load(out)) == entries(ew_binary(op, ta, tb))
    assert run(["binop", op, str(a), "--scalar", "2.5", str(out)]) == 0
    assert entries(load(out)) == entries(ew_binary(op, ta, 2.5))


def test_binop_shape_mismatch(tmp_path):
    a, b, out = tmp_path / "a.mtf", tmp_path / "b.mtf", tmp_path / "o.mtf"
    save(a, create((2, 3)))
    save(b, create((3, 2)))
    assert run(["binop", "add", str(a), str(b), str(out)]) == 4
    assert not out.exists()


def test_usage_errors(t324, tmp_path):
    out = tmp_path / "o.mtf"
    assert run(["reshape", str(t324), "--shape", "a,b", str(out)]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["binop", "add", str(t324), str(out)]) == 2
    assert run(["binop", "pow", str(t324), str(t324), str(out)]) == 2
    assert run(["transpose", str(t324), "--axes", "0", str(out)]) == 2
    assert run(["new", "--shape", "2", "--fill", "x", str(out)]) == 2
    assert not out.exists()


def test_format_errors(tmp_path):
    bad = tmp_path / "bad.mtf"
    bad.write_bytes(b"XXXX" + encode(create((2,)))[4:])
    assert run(["info", str(bad)]) == 3
    assert run(["info", str(tmp_path / "missing.mtf")]) == 3
    bad.write_bytes(encode(create((2,))) + b"junk")
    assert run(["print", str(bad)]) == 3


def test_domain_errors(t324, tmp_path):
    out = tmp_path / "o.mtf"
    assert run(["slice", str(t324), "--base", "2,0,0", "--shape", "2,1,1", str(out)]) == 4
    assert run(["bind", str(t324), "--axis", "3", "--at", "0", str(out)]) == 4
    assert run(["permute", str(t324), "--perm", "0,0,1", str(out)]) == 4
    assert run(["new", "--shape", "3,0", str(out)]) == 4
    assert not out.exists()


def test_failed_write_keeps_existing(t324, tmp_path):
    out = tmp_path / "o.mtf"
    out.write_bytes(b"previous")
    assert run(["reshape", str(t324), "--shape", "7", str(out)]) == 4
    assert out.read_bytes() == b"previous"
    assert [p.name for p in tmp_path.iterdir() if p.name.startswith(".tensorctl-")] == []


def test_help():
    assert run(["--help"]) == 0


def test_console_script(t324):
    proc = subprocess.run([sys.executable, "-m", "rtview.cli", "info", str(t324)],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0
    assert "size: 24" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "rtview.cli", "reshape", str(t324), "--shape", "5,5",
                           str(t324) + ".out"], capture_output=True, text=True)
    assert proc.returncode == 4
    assert "SizeMismatch" in proc.stderr and proc.stdout == ""
