import json
import subprocess
import sys

import pytest

from hsideals.cli import main
from hsideals.monomial import parse_ideal

from .conftest import EX14, EX14_HS1


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hs_example(capsys, files):
    code, out, _ = run(capsys, "hs", files("i.txt", EX14))
    assert code == 0
    line = out.strip()
    assert line.startswith("HS_1 = ")
    assert parse_ideal(line[len("HS_1 = "):], 4) == parse_ideal(EX14_HS1, 4)


def test_hs_triangle_and_k0(capsys, files):
    f = files("t.txt", "x1x2, x1x3, x2x3")
    assert run(capsys, "hs", f)[1] == "HS_1 = x1*x2*x3\n"
    assert run(capsys, "hs", f, "--k", "0")[1] == "HS_0 = x1*x2, x1*x3, x2*x3\n"


def test_hs_routes_agree(capsys, files):
    f = files("t.txt", EX14)
    outs = [json.loads(run(capsys, "hs", f, "--k", "0-3", "--json", "--route", r)[1]) for r in ("linquot", "betti")]
    assert [h["gens"] for h in outs[0]["hs"]] == [h["gens"] for h in outs[1]["hs"]]
    auto = json.loads(run(capsys, "hs", f, "--k", "all", "--json")[1])
    assert all(h["cross_checked"] for h in auto["hs"])


def test_hs_linquot_route_refuses_non_lq(capsys, files):
    code, _, err = run(capsys, "hs", files("s.txt", "x1^2, x2^2"), "--route", "linquot")
    assert code == 2 and "linear quotients" in err


def test_hs_without_lq_uses_betti(capsys, files):
    code, out, _ = run(capsys, "hs", files("s.txt", "x1^2, x2^2"))
    assert code == 0 and out == "HS_1 = x1^2*x2^2\n"


def test_parse_error_exit_code(capsys, files):
    code, _, err = run(capsys, "hs", files("bad.txt", "x1x2,\nx1 ^"))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys):
    assert run(capsys, "hs", "/no/such/file")[0] == 2


def test_resource_cap_exit_code(capsys, files):
    code, _, err = run(capsys, "betti", files("i.txt", EX14_HS1), "--max-lattice", "5")
    assert code == 3 and "exceeds cap" in err


def test_betti(capsys, files):
    code, out, _ = run(capsys, "betti", files("i.txt", EX14_HS1))
    rows = {l.split("|")[0].strip(): l.split("|")[1].split() for l in out.splitlines()[2:]}
    assert rows["6"] == ["8", "15", "8", "1"] and rows["8"] == [".", "3", "5", "2"]
    assert run(capsys, "betti", files("p.txt", "x1^2x2"))[1].splitlines()[-1].split() == ["3", "|", "1"]
    data = json.loads(run(capsys, "betti", files("t.txt", "x1x2,x1x3,x2x3"), "--json")[1])
    assert data["graded"] == [[0, 2, 3], [1, 3, 2]]


def test_graph_report(capsys, files):
    out = run(capsys, "graph", files("c4.txt", "n 4\n1 2\n2 3\n3 4\n1 4\n"))[1]
    assert "chordal: no   induced cycle: 1 2 3 4" in out
    claw = json.loads(run(capsys, "graph", files("claw.txt", "n 4\n1 2\n1 3\n1 4\n"), "--json")[1])
    assert claw["chordal"]["verdict"] and not claw["proper-interval"]["verdict"] and not claw["reversible"]["verdict"]
    ex = json.loads(run(capsys, "graph", files("g.txt", "n 6\n1 2\n1 3\n1 4\n4 5\n4 6\n"), "--check", "cochordal", "--json")[1])
    assert ex == {"cochordal": ex["cochordal"]} and ex["cochordal"]["verdict"]


def test_make_graph(capsys):
    code, out, _ = run(capsys, "make-graph", "bipartite", "1", "2")
    assert code == 0 and out == "n 3\n1 2\n1 3\n"
    assert run(capsys, "make-graph", "cycle")[0] == 2
    out = run(capsys, "make-graph", "complete", "3", "--edge-ideal")[1]
    assert parse_ideal(out) == parse_ideal("x1x2, x1x3, x2x3")


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce", "ex1.4")
    assert code == 0 and out.startswith("ex1.4: pass")
    assert run(capsys, "reproduce", "ex9")[0] == 2


def test_fuzz_and_verify(capsys, tmp_path):
    out_file = str(tmp_path / "r.jsonl")
    code, out, _ = run(capsys, "fuzz", "T1.3", "--count", "5", "--seed", "2", "--out", out_file)
    assert code == 0 and "5/5 pass" in out
    code, out, _ = run(capsys, "verify", "records", out_file)
    assert code == 0 and "all records replay" in out
    assert run(capsys, "fuzz", "T1.3", "--count", "0")[0] == 0


def test_fuzz_counterexample_exit_code(capsys):
    assert run(capsys, "fuzz", "T2.6", "--count", "10", "--seed", "0")[0] == 1


def test_order_and_verify(capsys, files):
    ideal = files("i.txt", EX14)
    code, cert, _ = run(capsys, "order", ideal)
    assert code == 0
    c = files("c.txt", cert)
    assert run(capsys, "verify", "order", ideal, c) == (0, "valid\n", "")
    bad = files("bad.txt", "\n".join(reversed(cert.strip().splitlines()[1:])))
    assert run(capsys, "verify", "order", ideal, bad)[0] == 1
    assert run(capsys, "order", files("s.txt", "x1^2, x2^2"))[0] == 1


def test_module_entry_point(tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("x1x2, x1x3, x2x3")
    r = subprocess.run([sys.executable, "-m", "hsideals", "hs", str(p)], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "HS_1 = x1*x2*x3\n"
