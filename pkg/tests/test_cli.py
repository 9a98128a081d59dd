""" Unit test cases for the command line: canonical text, JSON documents
    and exit codes.
"""
import json

from qsympairs import cli


def test_normal_form(capsys):
    assert cli.run(["nf", "x1 y1", "--cartan=A1"]) == 0
    assert capsys.readouterr().out.strip() == "y1 x1 + (t1 - t1^-1)/(q - q^-1)"

def test_coproduct(capsys):
    assert cli.run(["coprod", "y1", "--config=P1"]) == 0
    assert capsys.readouterr().out.strip() == "y1 (x) t1^-1 + 1 (x) y1"

def test_json_document(capsys):
    assert cli.run(["counit", "x1", "--cartan=A1", "--json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert set(document) == {"pair", "subcommand", "inputs", "result", "certificates"}
    assert document["pair"] == "A1"
    assert document["subcommand"] == "counit"
    assert document["inputs"]["expr"] == "x1"
    assert document["result"] == "0"

def test_build_pair(capsys):
    assert cli.run(["build-pair", "--config=P1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["generators"] == {"B1": "y1 t1 + q^-2 * x1"}

def test_restricted_roots(capsys):
    assert cli.run(["restricted-roots", "--config=P3", "--max-degree=8"]) == 0
    assert capsys.readouterr().out.strip() == "BC1; variation pairs: {1,2}"

def test_spherical_text(capsys):
    assert cli.run(["spherical", "--weight=w:1,0", "--config=P2", "--max-degree=8"]) == 0
    assert capsys.readouterr().out.strip() == "false"

def test_help_exits_cleanly(capsys):
    assert cli.run(["--help"]) == 0
    assert "qsympairs nf" in capsys.readouterr().out

def test_usage_error():
    assert cli.run(["nf"]) == 1

def test_parse_error_exit(capsys):
    assert cli.run(["nf", "x1 +", "--cartan=A1"]) == 1
    assert capsys.readouterr().err.startswith("error:")

def test_validation_error_exit():
    assert cli.run(["build-pair", "--config=P9"]) == 1
    assert cli.run(["serre-defect", "1", "3", "--config=P2", "--max-degree=8"]) == 1

def test_budget_exit():
    assert cli.run(["simple", "--weight=r:1", "--cartan=A1", "--budget=1"]) == 2

def test_failed_certificate_exit(monkeypatch, capsys):
    def failing(invocation):
        return True, [{"name": "forced", "passed": False}]

    monkeypatch.setitem(cli.COMMANDS, "nf", failing)
    assert cli.run(["nf", "x1", "--cartan=A1"]) == 3
    assert capsys.readouterr().out.strip() == "true"

def test_invariant_assertion_exit(monkeypatch, capsys):
    def broken(invocation):
        raise AssertionError("Leading word (0,) survived its own subtraction")

    monkeypatch.setitem(cli.COMMANDS, "nf", broken)
    assert cli.run(["nf", "x1", "--cartan=A1"]) == 3
    assert "error: Leading word" in capsys.readouterr().err

def test_support_check_command_names(capsys):
    assert cli.run(["lemma73", "1", "2", "--config=P2", "--max-degree=8", "--json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["subcommand"] == "lemma73"
    assert document["result"]["status"] == "passed"
    assert cli.run(["support-check", "1", "2", "--config=P2", "--max-degree=8"]) == 0

def test_odd_data_exits(capsys):
    assert cli.run(["serre-defect", "2", "1", "--config=P4", "--max-degree=8"]) == 1
    assert "odd sequences" in capsys.readouterr().err
    assert cli.run(["serre-defect", "1", "2", "--config=P4", "--max-degree=8"]) == 0
    capsys.readouterr()
    assert cli.run(["support-check", "2", "1", "--config=P4", "--max-degree=8", "--json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["result"]["status"] == "not applicable"
