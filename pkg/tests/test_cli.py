import json
import subprocess
import sys

import pytest

from aegelfand import aefun
from aegelfand.certify import HandelmanCertificate, verify_certificate
from aegelfand.cli import main, run
from aegelfand.exact import parse_poly, parse_ratfun


def _run(*argv):
    doc, code = run(list(argv))
    assert doc["schema"] == 1 and "verb" in doc and "inputs_echo" in doc
    return doc, code


def test_order_example():
    doc, code = _run("order", "--ring", "Q(x)", "--lhs", "2*x/(1+x^2)", "--rhs", "1")
    assert code == 0 and doc["result"] is True


def test_false_is_an_answer():
    doc, code = _run("order", "--ring", "Q[x]", "--lhs", "x", "--rhs", "0")
    assert code == 0 and doc["result"] is False


def test_identities_example():
    doc, code = _run("identities", "--name", "semiring_Sk", "--k", "3")
    assert code == 0 and doc["result"] == "Verified"


@pytest.mark.parametrize(
    "argv",
    [
        ("order", "--ring", "Q[x]", "--lhs", "x"),
        ("order", "--ring", "R", "--lhs", "x", "--rhs", "1"),
        ("order", "--ring", "Q[x]", "--lhs", "x^", "--rhs", "1"),
        ("identities", "--name", "semiring_Sk"),
        ("suite", "--name", "sec9", "--seed", "1"),
        ("frobnicate",),
    ],
)
def test_usage_and_parse_errors_exit_2(argv):
    doc, code = _run(*argv)
    assert code == 2 and "error" in doc


@pytest.mark.parametrize(
    "argv",
    [
        ("loc", "--ring", "Q[x]", "--frac", "1;x"),
        ("identities", "--name", "semiring_Sk", "--k", "1"),
        ("lattice", "--lhs", "x", "--rhs", "-x", "--op", "fring", "--third", "x^2"),
        ("certify", "--poly", "x^5", "--interval", "[-1,1]", "--dmax", "3"),
    ],
)
def test_precondition_failures_exit_3(argv):
    doc, code = _run(*argv)
    assert code == 3 and doc["error"]["type"]


def test_negative_values_after_options():
    doc, code = _run("ddagger", "--ring", "germ0", "--elem", "-x^2")
    assert code == 0 and doc["result"] == {"verdict": "InConeClosure", "witness": "1"}
    doc, code = _run("lattice", "--lhs", "x", "--rhs", "-x")
    assert code == 0
    assert aefun.parse_ae(doc["result"]) == aefun.parse_ae("piecewise{ (-inf,0): -x; (0,inf): x }")


def test_gelfand_example():
    doc, code = _run("gelfand", "--ring", "Q[x]", "--elem", "x^3-x", "--eval", "2", "--eval", "inf")
    assert code == 0
    assert doc["result"]["value_at_2"] == "6/1"
    assert doc["result"]["value_at_inf"] == "undefined"
    assert doc["result"]["max_domain_excludes"] == ["inf"]
    assert parse_ratfun(doc["result"]["transform"]) == parse_ratfun("x^3-x")


def test_certify_round_trips():
    doc, code = _run("certify", "--poly", "x^2+1/4", "--interval", "[-1,1]", "--dmax", "64")
    assert code == 0
    cert = HandelmanCertificate.from_json(doc["result"])
    assert verify_certificate(parse_poly("x^2+1/4"), cert)
    doc, code = _run("certify", "--poly", "x^2-1/4", "--interval", "[-1,1]", "--dmax", "64")
    assert code == 0 and doc["result"]["status"] == "NotPositive"


def test_loc_results_reparse():
    doc, code = _run("loc", "--ring", "Q[x]", "--frac", "x;x^2+1", "--other", "1;x^2+2", "--op", "add")
    assert code == 0
    r = doc["result"]
    total = parse_ratfun("x/(x^2+1) + 1/(x^2+2)")
    assert parse_ratfun(r["text"]) == total == parse_ratfun(r["num"]) / parse_ratfun(r["den"])


def test_bound_and_finitetop():
    doc, code = _run("bound", "--ring", "Q[x]", "--frac", "4*x;x^2+1")
    assert code == 0 and doc["result"]["n"] == 2
    space = json.dumps({"points": ["a", "b"], "min_open": {"a": ["a", "b"], "b": ["b"]}})
    doc, code = _run("finitetop", "--space", space, "--check", "opens")
    assert code == 0 and doc["result"]["opens"] == [[], ["b"], ["a", "b"]]
    doc, code = _run("finitetop", "--space", space, "--check", "components", "--set", '["a"]')
    assert code == 3


def test_suite_examples():
    doc, code = _run("suite", "--name", "sec5", "--seed", "42")
    assert code == 0 and doc["result"]["passed"]
    doc, code = _run("suite", "--name", "sec2", "--seed", "1")
    assert code == 0
    ident = [p for p in doc["result"]["properties"] if p["name"] == "sec2.identities"]
    assert ident and ident[0]["passed"]


def test_suite_all():
    doc, code = _run("suite", "--name", "all", "--seed", "0")
    assert code == 0 and doc["result"]["failures"] == []


def test_determinism(capsys):
    outputs = []
    for _ in range(2):
        assert main(["suite", "--name", "sec4", "--seed", "7"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "aegelfand", "order", "--ring", "Q", "--lhs", "-5", "--rhs", "1/2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] is True
    proc = subprocess.run([sys.executable, "-m", "aegelfand", "order", "--ring", "Q"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr and json.loads(proc.stdout)["error"]
