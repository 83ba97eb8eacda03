from __future__ import annotations

import math
import subprocess
import sys

import pytest

from localdim.cli import main
from localdim.diffgraph import parse_bigraph, parse_cover, random_bipartite, staircase, verify_cover
from localdim.poset import parse_poset, standard_example
from localdim.realizer import parse_realizer, verify_local_realizer


@pytest.fixture
def s3_file(tmp_path):
    path = tmp_path / "s3.txt"
    path.write_text(standard_example(3)[0].to_text())
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "layers", 1, 2, 3)
    assert code == 0
    P = parse_poset(out)
    assert P.n == 6
    target = tmp_path / "p.txt"
    assert run(capsys, "gen", "layers", 1, 2, 3, "--output", target)[0] == 0
    assert parse_poset(target.read_text()) == P


def test_ldim_of_standard_example(capsys, s3_file, tmp_path):
    witness = tmp_path / "w.txt"
    code, out, _ = run(capsys, "ldim", s3_file, "--output", witness)
    assert (code, out) == (0, "3\n")
    P = parse_poset(s3_file.read_text())
    assert verify_local_realizer(P, parse_realizer(witness.read_text())).mu == 3
    code, out, _ = run(capsys, "ldim", "--input", s3_file, "--emit-certificate")
    assert out.startswith("3\nple:")


def test_dim_and_verify_realizer(capsys, s3_file, tmp_path):
    witness = tmp_path / "w.txt"
    assert run(capsys, "dim", s3_file, "-o", witness)[:2] == (0, "3\n")
    code, out, _ = run(capsys, "verify", "realizer", s3_file, witness)
    assert code == 0 and out.startswith("ok mu=3")


def test_verify_local_reports_violation(capsys, s3_file, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("ple: 1 2 3 4 5 6\nple: 3 2 1 6 5 4\nple: 4 1\nple: 5 2\n")
    before = bad.read_text()
    code, out, _ = run(capsys, "verify", "local", s3_file, bad)
    assert code == 1
    assert out == "violation: incomparability-unreversed (6, 3)\n"
    assert bad.read_text() == before


def test_verify_cover(capsys, tmp_path):
    host = tmp_path / "h.txt"
    host.write_text(staircase(3).to_bipartite().to_text())
    cover = tmp_path / "c.txt"
    cover.write_text("rect: 1,2,3 | 1\nrect: 1 | 2,3\nrect: 2 | 2\n")
    code, out, _ = run(capsys, "verify", "cover", host, cover, "--kind", "biclique")
    assert code == 0 and "max_multiplicity=2" in out
    cover.write_text("rect: 1,2,3 | 1\nrect: 1 | 2,3\n")
    assert run(capsys, "verify", "cover", host, cover)[0] == 1
    cover.write_text("rect: 9 | 1\n")
    assert run(capsys, "verify", "cover", host, cover)[0] == 2


def test_exit_codes(capsys, tmp_path, s3_file):
    assert run(capsys, "frobnicate")[0] == 4
    assert run(capsys, "ldim")[0] == 4
    assert run(capsys, "ldim", tmp_path / "missing.txt")[0] == 4
    broken = tmp_path / "broken.txt"
    broken.write_text("poset 2\n1 < 1\n")
    assert run(capsys, "ldim", broken)[0] == 2
    big = tmp_path / "big.txt"
    big.write_text(standard_example(5)[0].to_text())
    assert run(capsys, "ldim", big)[0] == 3
    assert run(capsys, "ldim", s3_file, "--budget-nodes", 2)[0] == 3
    assert run(capsys, "bound", "boolean", 3)[0] == 4


def test_construct_outputs_reparse(capsys, s3_file):
    P = parse_poset(s3_file.read_text())
    for kind in ("height2", "removal"):
        code, out, _ = run(capsys, "construct", kind, s3_file)
        assert code == 0
        assert verify_local_realizer(P, parse_realizer(out)).ok
    code, out, _ = run(capsys, "construct", "removal", s3_file, "--rule", "pair", "--exact")
    assert code == 0 and "# ldim: 3" in out
    code, out, _ = run(capsys, "construct", "removal", s3_file, "--rule", "minmax", "--x", 1, "--y", 4)
    assert "# mu_after: 3" in out
    assert run(capsys, "construct", "removal", s3_file, "--rule", "minmax")[0] == 4
    code, out, _ = run(capsys, "construct", "bogart", s3_file, "--ca", "1", "--cb", "4")
    assert code == 0 and out.startswith("ple: 1")
    assert run(capsys, "construct", "bogart", s3_file, "--ca", "1", "--cb", "5")[0] == 4


def test_construct_covers(capsys):
    code, out, _ = run(capsys, "construct", "staircase", 4)
    assert code == 0 and "# row_max: 3" in out
    G = staircase(15).to_bipartite()
    assert verify_cover(G, parse_cover(out), "biclique").max_multiplicity == 3
    code, out, _ = run(capsys, "construct", "young", "5,4,4,2,1")
    assert code == 0 and "# max_multiplicity: 3" in out
    assert run(capsys, "construct", "young", "1,2")[0] == 4


def test_construct_product_and_split(capsys, tmp_path):
    chain2 = tmp_path / "c2.txt"
    chain2.write_text("poset 2\n1 < 2\n")
    code, out, _ = run(capsys, "construct", "product", chain2, chain2)
    assert code == 0 and "# mu: 2" in out
    code, out, _ = run(capsys, "construct", "split-bound", chain2, "--exact")
    assert code == 0 and "# ldim_upper:" in out


def test_bound_boolean(capsys):
    code, out, _ = run(capsys, "bound", "boolean", 1024)
    assert code == 0
    value = float(out.strip().splitlines()[-1].split()[-1])
    assert value == pytest.approx(27.2, rel=0.01)


def test_experiment_is_deterministic(capsys):
    args = ("experiment", "random-bipartite", "--n1", 3, "--n2", 4, "--seed", 11, "--trials", 3)
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0
    header = first[1].splitlines()[0].split()
    assert header == ["trial", "seed", "edges", "block_trace", "lbc", "ldc", "tdc"]
    tsv = run(capsys, *args, "--tsv")[1]
    assert tsv.splitlines()[0].split("\t") == header
    graph_edges = int(first[1].splitlines()[1].split()[2])
    assert graph_edges == len(parse_bigraph(_sample_text(3, 4, 11)).edges)


def _sample_text(n1, n2, seed):
    return random_bipartite(n1, n2, 1 / math.e, seed).to_text()


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "posets", "--max-n", 3, "--tsv")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert sum(int(r[3]) for r in rows if r[0] == "3") == 5
    assert all(r[4] == "yes" for r in rows)


def test_module_entry_point(s3_file):
    proc = subprocess.run([sys.executable, "-m", "localdim", "ldim", str(s3_file)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "3\n"
