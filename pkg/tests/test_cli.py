"""CLI behaviour: formats, exit codes, determinism, bookkeeping."""

import math

import pytest

from faddeeva.cli import main
from faddeeva.grids import GridSpec

from conftest import write_reference_csv


def run(*argv):
    return main(list(argv))


def test_eval_w_origin_exact_format(capsys):
    assert run("eval", "--fn", "w", "--re", "0", "--im", "0") == 0
    out = capsys.readouterr().out.strip()
    assert out == "1.0000000000000000e0 0.0000000000000000e0"


def test_eval_erf_one(capsys):
    assert run("eval", "--fn", "erf", "--re", "1", "--im", "0") == 0
    re_s, im_s = capsys.readouterr().out.split()
    assert abs(float(re_s) - math.erf(1.0)) < 5e-16
    assert float(im_s) == 0.0


def test_eval_overflow_warns_but_exits_zero(capsys):
    assert run("eval", "--fn", "w", "--re", "0", "--im", "-30") == 0
    captured = capsys.readouterr()
    assert "inf" in captured.out
    assert "non-finite" in captured.err


def test_eval_usage_errors():
    assert run("eval", "--fn", "nope", "--re", "0", "--im", "0") == 2
    assert run("eval", "--re", "0") == 2
    assert run("eval", "--fn", "w", "--re", "x", "--im", "0") == 2
    assert run("eval", "--fn", "w", "--re", "0", "--im", "0", "--eps", "0") == 2
    assert run("eval", "--fn", "w", "--re", "0", "--im", "0", "--h-override", "-1") == 2


def test_params_output(capsys):
    assert run("params") == 0
    lines = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert 0.5012 <= float(lines["h"]) <= 0.5032
    assert int(lines["n_terms"]) == 12
    assert 6.12 <= float(lines["re_cut"]) <= 6.22
    assert 40.9 <= float(lines["g_cut"]) <= 41.1
    assert float(lines["asym_radius"]) == 30.0
    assert int(lines["asym_terms"]) == 6


def test_params_bad_eps():
    assert run("params", "--eps", "0") == 2
    assert run("params", "--eps", "1.5") == 2


@pytest.fixture(scope="module")
def small_reference(tmp_path_factory):
    path = tmp_path_factory.mktemp("ref") / "small.csv"
    grid = GridSpec(-1.0, 1.0, -1.0, 1.0, 5, 5)
    write_reference_csv(path, grid.points())
    return path


def test_accuracy_map_small_grid(small_reference, tmp_path, capsys):
    out = tmp_path / "map.csv"
    args = ["accuracy-map", "--fn", "w",
            "--re-min", "-1", "--re-max", "1", "--im-min", "-1", "--im-max", "1",
            "--nre", "5", "--nim", "5",
            "--reference", str(small_reference), "--out", str(out)]
    assert run(*args) == 0
    summary = capsys.readouterr().out.strip()
    assert summary.startswith("mean=")
    fields = dict(kv.split("=") for kv in summary.split())
    assert float(fields["mean"]) <= float(fields["max"])
    assert int(fields["n"]) == 25
    body = out.read_bytes()
    assert body.splitlines()[0] == b"z_re,z_im,relerr_deps,region,overflowed"
    assert len(body.splitlines()) == 26
    # byte-identical on a second run
    out2 = tmp_path / "map2.csv"
    args[-1] = str(out2)
    assert run(*args) == 0
    capsys.readouterr()
    assert out2.read_bytes() == body


def test_accuracy_map_degenerate_grid(tmp_path, capsys):
    ref = tmp_path / "ref.csv"
    write_reference_csv(ref, [0j])
    out = tmp_path / "map.csv"
    assert run("accuracy-map", "--fn", "w",
               "--re-min", "0", "--re-max", "0", "--im-min", "0", "--im-max", "0",
               "--nre", "1", "--nim", "1",
               "--reference", str(ref), "--out", str(out)) == 0
    fields = dict(kv.split("=") for kv in capsys.readouterr().out.strip().split())
    assert float(fields["mean"]) == float(fields["max"])
    assert float(fields["max"]) <= 1.0
    assert int(fields["n"]) == 1


def test_accuracy_map_reference_overflow_rows(tmp_path, capsys):
    # at z = -27i the true |w| = 2e^729 exceeds binary64: relerr undefined,
    # the row is flagged and excluded from the mean
    ref = tmp_path / "ref.csv"
    write_reference_csv(ref, [complex(0.0, -27.0), complex(0.0, 0.0)])
    out = tmp_path / "map.csv"
    assert run("accuracy-map", "--fn", "w",
               "--re-min", "0", "--re-max", "0", "--im-min", "-27", "--im-max", "0",
               "--nre", "1", "--nim", "2",
               "--reference", str(ref), "--out", str(out)) == 0
    fields = dict(kv.split("=") for kv in capsys.readouterr().out.strip().split())
    assert int(fields["n"]) == 1
    assert math.isfinite(float(fields["mean"]))
    rows = out.read_text().splitlines()[1:]
    overflow_row = [r for r in rows if r.startswith("0.0,-27.0")][0]
    assert ",nan," in overflow_row
    assert overflow_row.endswith(",true")


def test_eval_imw_complex_embedding(capsys):
    assert run("eval", "--fn", "imw", "--re", "1", "--im", "0") == 0
    re_s, im_s = capsys.readouterr().out.split()
    assert abs(float(re_s) - 0.6071577058413937) < 1e-15
    assert float(im_s) == 0.0


def test_accuracy_map_grid_mismatch(small_reference, tmp_path, capsys):
    out = tmp_path / "map.csv"
    code = run("accuracy-map", "--fn", "w",
               "--re-min", "-1", "--re-max", "1", "--im-min", "-1", "--im-max", "1",
               "--nre", "6", "--nim", "5",
               "--reference", str(small_reference), "--out", str(out))
    assert code == 3
    assert "not present in reference" in capsys.readouterr().err


def test_bench_bookkeeping(capsys):
    args = ["bench", "--fn", "w",
            "--re-min", "-8", "--re-max", "8", "--im-min", "-8", "--im-max", "8",
            "--nre", "9", "--nim", "9", "--reps", "1"]
    assert run(*args) == 0
    out = capsys.readouterr().out
    totals = 0
    checksum = None
    for line in out.splitlines():
        if line.startswith("checksum="):
            checksum = line
        elif line.startswith("region=") and "region=ALL" not in line:
            totals += int(line.rsplit("n=", 1)[1])
    assert totals == 81
    assert checksum is not None
    # checksum invariant under repetition count
    args[-1] = "3"
    assert run(*args) == 0
    out2 = capsys.readouterr().out
    checksum2 = [l for l in out2.splitlines() if l.startswith("checksum=")][0]
    assert checksum2 == checksum


def test_bench_rejects_zero_reps():
    assert run("bench", "--fn", "w",
               "--re-min", "0", "--re-max", "1", "--im-min", "0", "--im-max", "1",
               "--nre", "2", "--nim", "2", "--reps", "0") == 2


def test_selftest_passes(capsys):
    assert run("selftest") == 0
    out = capsys.readouterr().out
    assert out.count("ok ") == 6
    assert "FAIL" not in out


def test_selftest_bad_override():
    assert run("selftest", "--h-override", "-1") == 2
