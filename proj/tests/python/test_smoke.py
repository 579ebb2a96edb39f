import json

import pytest

import efdkit


def test_canon_pieces():
    pl = efdkit.canon(r"2 x1 \/ 6 x1")
    assert pl["n"] == 1
    assert sorted(p["form"] for p in pl["pieces"]) == [[2], [6]]


def test_reduce():
    assert efdkit.reduce(4, r"2 x1 \/ 6 x1") == 2
    assert efdkit.reduce(6, r"2 x1 \/ 4 x1") == 3


def test_classify_group_union_of_primes():
    c = efdkit.classify([efdkit.delta(6), efdkit.delta(10)])
    assert c == {"family": "G", "class": "divisible", "primes": [2, 3, 5]}


def test_classify_mv_epsilon():
    c = efdkit.classify(efdkit.epsilon(6), sig="mv")
    assert c["class"] == "divisible"
    assert c["primes"] == [2, 3]


def test_fulldim():
    assert efdkit.fulldim([[1, 0], [-1, 0]]) == {"full": False, "vanishing": [1, 0]}
    assert efdkit.fulldim([[1, 0], [0, 1]])["full"] is True


def test_eval_and_check():
    assert efdkit.eval("gamma(q)", "x1 -. x2", {"x1": "(0,1/2)", "x2": "(0,1/3)"}, sig="hoop") == "(0, 1/6)"
    assert efdkit.check("qs:2", efdkit.delta(2))["status"] == "consistent-on-sample"
    assert efdkit.check("qs:2", efdkit.delta(3))["status"] == "falsified"


def test_errors():
    with pytest.raises(efdkit.ParseError):
        efdkit.parse_term("x1 +")
    with pytest.raises(efdkit.InvalidArgument):
        efdkit.reduce(0, "x1")
    assert issubclass(efdkit.CapExceeded, efdkit.FragmentError)
    assert issubclass(efdkit.FragmentError, efdkit.EfdkitError)


def test_run_cli_exit_codes():
    code, out, _ = efdkit.run_cli("classify", "--sig", "mv", "--sentence", "epsilon 6")
    assert code == 0
    assert json.loads(out)["primes"] == [2, 3]
    code, out, _ = efdkit.run_cli("parse", "x1 +")
    assert code == 2
    assert json.loads(out)["schema"] == "efdkit.error/1"


def test_selftest_is_reproducible():
    a = efdkit.selftest("lattice-laws", budget=50)
    b = efdkit.selftest("lattice-laws", budget=50)
    assert a == b
    assert all(p["failures"] == 0 for p in a["properties"])
