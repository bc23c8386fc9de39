import csv
import io
import json
import subprocess
import sys

import pytest

from multicover.cli import RunConfig, main
from multicover.mcover import p_kl
from multicover.poset import PreconditionError, chain, pentagon


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, P in [("n5", pentagon()), ("chain5", chain(5)), ("p33", p_kl(3, 3))]:
        p = tmp_path / f"{name}.json"
        p.write_text(P.to_json())
        paths[name] = str(p)
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    paths["bad"] = str(bad)
    paths["dir"] = tmp_path
    return paths


def test_poset_checks(files):
    # the pentagon is the Tamari lattice of parameter 3, which is trim
    code, out = run("poset", "--in", files["n5"], "--check", "lattice,trim")
    assert code == 0
    assert out.strip() == "lattice: true, trim: true"


def test_poset_dot(files):
    dot = files["dir"] / "out.dot"
    code, _ = run("poset", "--in", files["chain5"], "--dot", str(dot))
    assert code == 0
    assert dot.read_text().count("label=") == 5


def test_malformed_json_exit_2(files):
    assert run("poset", "--in", files["bad"])[0] == 2


def test_unknown_flag_exit_2():
    assert run("poset", "--bogus")[0] == 2


def test_predicate_precondition_exit_3(tmp_path):
    p = tmp_path / "anti.json"
    p.write_text(json.dumps({"n": 2, "covers": []}))
    code, _ = run("poset", "--in", str(p), "--check", "extremal")
    assert code == 3


def test_mcover_sizes(files):
    code, out = run("mcover", "--in", files["chain5"], "-m", "2")
    assert code == 0
    assert "size 12 (formula 12), length 8" in out
    code, out = run("mcover", "--in", files["p33"], "-m", "2")
    assert "size 21" in out


def test_mcover_m1_reports_isomorphism(files):
    code, out = run("mcover", "--in", files["chain5"], "-m", "1")
    assert "isomorphic to input: true" in out


def test_mcover_m0_exit_3(files):
    assert run("mcover", "--in", files["chain5"], "-m", "0")[0] == 3


def test_mcover_json(files):
    code, out = run("mcover", "--in", files["n5"], "-m", "2", "--format", "json")
    d = json.loads(out)
    assert d["size"] == d["size_formula"] == 12
    assert [0, 1] in d["tuples"]


def test_tamari(files):
    assert run("tamari", "-n", "3", "-m", "2")[1].strip() == "n=3 m=2: elements 12, J 6, M 6"
    assert "elements 1," in run("tamari", "-n", "1", "-m", "7")[1]
    code, out = run("tamari", "-n", "4", "-m", "2", "--format", "csv")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["elements"] == "55"


def test_tamari_zero_exit_3():
    assert run("tamari", "-n", "0", "-m", "2")[0] == 3


def test_dm_of_file(files, tmp_path):
    p = tmp_path / "crown.json"
    p.write_text(json.dumps({"n": 4, "covers": [[0, 2], [0, 3], [1, 2], [1, 3]]}))
    code, out = run("dm", "--in", str(p))
    assert json.loads(out) == {"input_size": 4, "completed_size": 7, "added": 3}


def test_dm_tamari():
    code, out = run("dm", "-n", "4", "-m", "2")
    assert code == 0
    (d,) = json.loads(out)
    assert d["completed_size"] == 55 and len(d["added_cuts"]) == 10


def test_strip_lines():
    code, out = run("strip", "-n", "3", "-m", "2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 12
    r = next(r for r in rows if r["path"] == [0, 1, 2])
    assert r["strips"] == [[0, 1, 1], [0, 0, 1]]
    assert r["bounced"] == [[0, 1, 2], [0, 0, 0]]


def test_verify_conjecture_csv_is_deterministic():
    code, a = run("verify", "conjecture", "--n-max", "4", "--m-max", "3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(a)))
    assert list(rows[0]) == ["n", "m", "path_count", "injective", "order_iso", "elapsed_ms"]
    assert len(rows) == 12
    assert all(r["injective"] == r["order_iso"] == "true" for r in rows)
    _, b = run("verify", "conjecture", "--n-max", "4", "--m-max", "3")
    strip_time = lambda text: [r[:-1] for r in csv.reader(io.StringIO(text))]  # noqa: E731
    assert strip_time(a) == strip_time(b)


def test_verify_completion():
    code, out = run("verify", "completion", "--pairs", "3:2,4:2,3:3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["isomorphic"] for r in rows] == ["true"] * 3


def test_verify_lattice_criterion():
    code, out = run("verify", "lattice-criterion", "--exhaustive-n", "6", "--m", "2,3")
    assert code == 0
    # header plus 1 + 1 + 2 + 5 + 16 bounded posets of sizes 2..6
    assert len(out.splitlines()) == 26


def test_verify_trim_reports_claim_failure():
    # the stated characterization of trim m-covers fails on this family
    code, _ = run("verify", "trim")
    assert code == 4


def test_budget_exit_5():
    assert run("verify", "completion", "--pairs", "4:2", "--budget", "1")[0] == 5


def test_json_output_to_file(tmp_path):
    out = tmp_path / "r.json"
    code, _ = run("verify", "conjecture", "--n-max", "3", "--m-max", "2", "--format", "json", "--out", str(out))
    assert code == 0
    assert len(json.loads(out.read_text())) == 6


def test_run_config_rejects_bad_format():
    with pytest.raises(PreconditionError):
        RunConfig(subcommand="poset", fmt="xml")


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "multicover.cli", "poset", "--in", files["n5"], "--check", "lattice"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "lattice: true"
