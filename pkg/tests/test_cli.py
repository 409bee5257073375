import json
import subprocess
import sys

import pytest

from critlab.cli import main
from critlab.formats import to_graph6
from critlab.graphs import complete_graph, cycle_graph, join


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    docs = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, docs


def test_chroma(capsys):
    code, docs = run(capsys, "chroma", "--g6", "E~~w")
    assert code == 0 and docs[0]["chi"] == 6
    assert len(set(docs[0]["coloring"])) == 6

    code, docs = run(capsys, "chroma", "--edges", "0 1,1 2,2 0")
    assert code == 0 and docs[0]["chi"] == 3


def test_chroma_file_batch(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("".join(to_graph6(complete_graph(k)) + "\n" for k in (3, 4, 5)))
    code, docs = run(capsys, "chroma", "--file", str(path))
    assert code == 0
    assert [d["chi"] for d in docs] == [3, 4, 5]


def test_chroma_parse_error_exit_2(capsys):
    assert main(["chroma", "--g6", "!!!"]) == 2


def test_chroma_petersen_file(tmp_path, capsys):
    from oracles import petersen

    path = tmp_path / "petersen.g6"
    path.write_text(to_graph6(petersen()) + "\n")
    code, docs = run(capsys, "chroma", "--file", str(path))
    assert code == 0 and docs[0]["chi"] == 3


def test_check_exit_codes(capsys):
    code, docs = run(capsys, "check", "--g6", "E~~w", "--predicate", "triangle")
    assert code == 0 and docs[0]["predicate"]["holds"] is True

    c5 = to_graph6(cycle_graph(5))
    code, docs = run(capsys, "check", "--g6", c5, "--predicate", "double")
    assert code == 1
    assert docs[0]["predicate"]["witness"]["kind"] == "edge"

    k2 = to_graph6(complete_graph(2))
    code, docs = run(capsys, "check", "--g6", k2, "--predicate", "triangle")
    assert code == 1
    assert docs[0]["predicate"]["witness"]["kind"] == "chi_below_3"

    k3 = to_graph6(complete_graph(3))
    code, docs = run(capsys, "check", "--g6", k3, "--predicate", "indep-edges")
    assert code == 0 and docs[0]["predicate"]["applicable"] is False


def test_replay_and_certify(tmp_path, capsys):
    code, docs = run(capsys, "replay", "--g6", "E~~w")
    assert code == 0 and docs[0]["verdict"] == "COMPLETE_K6"

    c5k3 = to_graph6(join(cycle_graph(5), complete_graph(3)))
    code, docs = run(capsys, "replay", "--g6", c5k3)
    assert code == 0 and docs[0]["verdict"] == "BAD_TRIANGLE"

    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(docs[0]))
    code, docs = run(capsys, "certify", "--check", str(cert))
    assert code == 0 and docs[0]["valid"] is True

    tampered = json.loads(cert.read_text())
    tampered["detail"]["triangle"] = [0, 1, 2]  # not a triangle in C5 join K3
    cert.write_text(json.dumps(tampered))
    code, docs = run(capsys, "certify", "--check", str(cert))
    assert code == 1 and docs[0]["valid"] is False

    tampered["schema"] = "something/else"
    cert.write_text(json.dumps(tampered))
    assert main(["certify", "--check", str(cert)]) == 2

    cert.write_text("not json")
    assert main(["certify", "--check", str(cert)]) == 2


def test_verify_cli(tmp_path, capsys):
    hits = tmp_path / "hits.g6"
    code, docs = run(capsys, "verify", "--k", "4", "--n-max", "6",
                     "--conjecture", "double", "--jobs", "1",
                     "--hits-out", str(hits))
    assert code == 0
    assert docs[0]["hits"] == [to_graph6(complete_graph(4))]
    assert hits.read_text().strip() == to_graph6(complete_graph(4))

    assert main(["verify", "--k", "7", "--n-max", "5"]) == 2
    assert main(["verify", "--k", "6", "--n-max", "11"]) == 2


def test_verify_g6_in(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_text("".join(to_graph6(complete_graph(k)) + "\n" for k in (3, 4, 5, 6)))
    code, docs = run(capsys, "verify", "--k", "6", "--n-max", "9",
                     "--g6-in", str(path), "--jobs", "1")
    assert code == 0
    assert docs[0]["source"] == "stream" and docs[0]["graphs_scanned"] == 4
    assert docs[0]["hits"] == ["E~~w"]


def test_verify_counterexample_exit(tmp_path, capsys):
    # a stream without K4 yields an unexpected (empty) hit set: exit 1
    path = tmp_path / "in.g6"
    path.write_text(to_graph6(cycle_graph(5)) + "\n")
    code, docs = run(capsys, "verify", "--k", "4", "--n-max", "6",
                     "--g6-in", str(path), "--jobs", "1")
    assert code == 1 and docs[0]["hits"] == []


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--k", "6"])  # missing --n-max
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_check_file_batch_json_lines(tmp_path, capsys):
    path = tmp_path / "batch.g6"
    path.write_text(to_graph6(complete_graph(6)) + "\n" + to_graph6(cycle_graph(5)) + "\n")
    code, docs = run(capsys, "check", "--file", str(path), "--predicate", "triangle")
    assert code == 1  # C5 fails
    assert [d["triangle_critical"] for d in docs] == [True, False]


def test_pretty_flag(capsys):
    code = main(["chroma", "--g6", "Bw", "--pretty"])
    out = capsys.readouterr().out
    assert code == 0 and out.count("\n") > 3
    assert json.loads(out)["chi"] == 3


def test_jobs_env_fallback(monkeypatch, capsys):
    monkeypatch.setenv("CRIT_LAB_JOBS", "1")
    code, docs = run(capsys, "verify", "--k", "3", "--n-max", "4")
    assert code == 0 and docs[0]["jobs"] == 1


def test_console_script_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "critlab.cli", "chroma", "--g6", "Bw"],
        capture_output=True, text=True, timeout=300,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["chi"] == 3


def test_stdin_graph_input():
    proc = subprocess.run(
        [sys.executable, "-m", "critlab.cli", "chroma", "--file", "-"],
        input="Bw\nC~\n", capture_output=True, text=True, timeout=300,
    )
    assert proc.returncode == 0
    chis = [json.loads(line)["chi"] for line in proc.stdout.splitlines()]
    assert chis == [3, 4]
