"""CLI surface: output shapes, determinism, exit codes."""

import json

from genpos.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_family(capsys):
    code, out, _ = run(capsys, "invariants", "family:cycle:5")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 5 and obj["diam"] == 2 and obj["b"] == 5
    assert obj["s"] == 0 and obj["gp_o"] == 2


def test_invariants_graph6_and_witnesses(capsys):
    code, out, _ = run(capsys, "invariants", "Dhc", "--witnesses")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["witnesses"]["gp"]) == obj["gp"] == 3


def test_invariants_oracle_engine(capsys):
    code, out, _ = run(capsys, "invariants", "family:path:4", "--oracle")
    assert code == 0
    assert json.loads(out)["gp_t"] == 2


def test_invariants_disconnected(capsys):
    code, _, err = run(capsys, "invariants", "A?")
    assert code == 2 and "disconnected" in err
    code, out, _ = run(capsys, "invariants", "A?", "--allow-disconnected")
    assert code == 0
    assert json.loads(out)["connected"] is False


def test_product_strong_k4(capsys):
    code, out, _ = run(capsys, "product", "strong", "family:path:2", "family:path:2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "C~"
    assert lines[1].startswith("# codec:")


def test_product_lex_with_invariants(capsys):
    code, out, _ = run(capsys, "product", "lex", "family:path:3",
                       "family:complete:2", "--invariants")
    assert code == 0
    obj = json.loads(out.splitlines()[2])
    assert obj["n"] == 6 and obj["gp_o"] == 4


def test_product_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("GP_VERTEX_CAP", "10")
    code, _, err = run(capsys, "product", "strong", "family:path:4", "family:path:4")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("GP_VERTEX_CAP", "banana")
    code, _, err = run(capsys, "product", "strong", "family:path:2", "family:path:2")
    assert code == 2


def test_corpus_stream(capsys):
    code, out, _ = run(capsys, "corpus", "exhaustive:3")
    assert code == 0
    assert len(out.splitlines()) == 4
    code, out, _ = run(capsys, "corpus", "family:star:3")
    assert code == 0 and len(out.splitlines()) == 1


def test_corpus_cap_exit(capsys):
    code, _, err = run(capsys, "corpus", "exhaustive:7")
    assert code == 2 and err


def test_verify_single_fixed_statement(capsys):
    code, out, _ = run(capsys, "verify", "--statements", "S14")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert lines[0]["outcome"] == "holds"
    assert lines[-1]["type"] == "summary" and lines[-1]["fails"] == 0


def test_verify_exit_1_on_fails(capsys):
    code, out, _ = run(capsys, "verify", "--statements", "S17")
    assert code == 1
    lines = [json.loads(l) for l in out.splitlines()]
    assert lines[-1]["fails"] == 1


def test_verify_unknown_statement(capsys):
    code, _, err = run(capsys, "verify", "--statements", "bogus")
    assert code == 2 and err


def test_verify_deterministic_output(capsys):
    args = ("verify", "--statements", "S1,S2,S4", "--corpus", "exhaustive:4")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    lines = [json.loads(l) for l in out1.splitlines()]
    assert lines[-1]["fails"] == 0
    assert all(l["outcome"] == "holds" for l in lines[:-1])


def test_verify_jobs_output_identical(capsys):
    base = ("verify", "--statements", "S1,S9", "--corpus", "exhaustive:3")
    _, out1, _ = run(capsys, *base, "--jobs", "1")
    _, out2, _ = run(capsys, *base, "--jobs", "3")
    assert out1 == out2


def test_statements_listing(capsys):
    code, out, _ = run(capsys, "statements")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines()]
    assert len(lines) == 27
    assert lines[0]["id"] == "S1" and lines[-1]["id"] == "S27"


def test_bad_usage(capsys):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "invariants", "not graph6 at all!")[0] == 2
