import json

import pytest

from cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from nullcone import INFINITY


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr()


def test_poincare_json(capsys):
    status, out = run(capsys, "poincare", "--n", "9", "--max-degree", "20", "--json")
    assert status == EXIT_OK
    payload = json.loads(out.out)
    assert payload["dims"]["20"] == 217
    assert payload["dims"]["6"] == 0


def test_poincare_check(capsys):
    assert run(capsys, "poincare", "--n", "9", "--check")[0] == EXIT_OK
    assert run(capsys, "poincare", "--n", "7", "--check")[0] == EXIT_MISMATCH


def test_poincare_numerator(capsys):
    status, out = run(capsys, "poincare", "--n", "9", "--max-degree", "92",
                      "--degrees", "4,8,10,12,12,14,16", "--json")
    assert status == EXIT_OK
    assert json.loads(out.out)["rational"]["numerator_degree"] == 66


def test_poincare_too_shallow_for_the_numerator(capsys):
    status, out = run(capsys, "poincare", "--n", "9", "--degrees", "4,8,10,12,12,14,16")
    assert status == EXIT_USAGE
    assert "need 92" in out.err


def test_ecriture(capsys):
    status, out = run(capsys, "ecriture", "--n", "3", "--json")
    assert status == EXIT_OK
    assert json.loads(out.out) == [{"degrees": [4], "numerator_degree": 0, "numerator": [1]}]


def test_nullcone_test(capsys):
    status, out = run(capsys, "nullcone", "test", "--form", "9: 0,0,0,0,0,0,0,0,0,1", "--json")
    assert status == EXIT_OK
    payload = json.loads(out.out)
    assert (payload["multiplicity"], payload["witness"], payload["is_nullform"]) == (9, INFINITY, True)


def test_nullcone_test_checks_the_order(capsys):
    assert run(capsys, "nullcone", "test", "--n", "7", "--form", "9: 1,0,0,0,0,0,0,0,0,1")[0] == EXIT_USAGE


def test_catalog(capsys):
    status, out = run(capsys, "catalog", "--n", "3", "--format", "csv")
    assert status == EXIT_OK
    lines = out.out.splitlines()
    assert lines[0] == "name,expr,order,degree,hsop"
    assert lines[-1] == "i_4,(tr @h @h 2),0,4,True"


def test_catalog_unknown_order(capsys):
    status, out = run(capsys, "catalog", "--n", "5")
    assert status == EXIT_USAGE
    assert "no catalog" in out.err


@pytest.mark.parametrize("form, value", [
    ("9: 0,0,0,0,1,0,0,0,0,0", "0: 0"),
    ("9: 1,0,0,0,0,0,0,0,0,1", "0: -2"),
])
def test_eval(capsys, form, value):
    status, out = run(capsys, "eval", "--n", "9", "--expr", "@j_4", "--form", form, "--json")
    assert status == EXIT_OK
    assert json.loads(out.out) == {"expr": "@j_4", "order": 0, "value": value}


def test_eval_over_a_prime_field(capsys):
    status, out = run(capsys, "eval", "--n", "9", "--expr", "(tr f f 8)", "--ring", "32003",
                      "--form", "9: 1,2,3,4,5,6,7,8,9,10")
    assert status == EXIT_OK
    assert out.out.startswith("2: ")


def test_eval_rejects_a_truncated_expression(capsys):
    status, out = run(capsys, "eval", "--n", "9", "--expr", "(tr f f", "--form", "9: 1,0,0,0,0,0,0,0,0,1")
    assert status == EXIT_USAGE
    assert "unexpected end of expression" in out.err


def test_basis(capsys):
    status, out = run(capsys, "basis", "--n", "9", "--max-degree", "4", "--no-cache", "--check", "--json")
    assert status == EXIT_OK
    payload = json.loads(out.out)
    assert payload["total"] == 2
    assert [b["degree"] for b in payload["basis"]] == [4, 4]


def test_basis_rejects_a_bad_prime(capsys):
    assert run(capsys, "basis", "--n", "9", "--max-degree", "4", "--prime", "4")[0] == EXIT_USAGE
    assert run(capsys, "basis", "--n", "9", "--max-degree", "4", "--prime", "17")[0] == EXIT_USAGE


def test_hsop_check_refutes(capsys):
    status, out = run(capsys, "hsop", "check", "--set", "thm_minus_j16", "--no-cache", "--json")
    assert status == EXIT_MISMATCH
    assert json.loads(out.out)["verdict"] == "refuted"


def test_hsop_check_set_order(capsys):
    assert run(capsys, "hsop", "check", "--n", "7", "--set", "thm")[0] == EXIT_USAGE


def test_verify_lemmas(capsys):
    status, out = run(capsys, "verify-lemmas", "--json")
    assert status == EXIT_OK
    assert json.loads(out.out)["passed"]


@pytest.mark.parametrize("argv, status", [
    (["--help"], EXIT_OK),
    ([], EXIT_USAGE),
    (["tabulate"], EXIT_USAGE),
    (["poincare"], EXIT_USAGE),
    (["hsop", "check", "--set", "thm", "--expr", "@j_4"], EXIT_USAGE),
])
def test_usage(capsys, argv, status):
    assert run(capsys, *argv)[0] == status
