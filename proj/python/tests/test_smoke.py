import json

import _qcusp


def test_suite_names():
    names = _qcusp.suite_names()
    assert "ncmatrix" in names
    assert "star" in names
    assert len(names) == 7


def test_verify_rewrite():
    report = json.loads(_qcusp.verify("rewrite", max_degree=8, hopf_degree=3))
    assert report["suite"] == "rewrite"
    assert report["checks"]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_is_deterministic():
    one = _qcusp.verify("rewrite", max_degree=8, hopf_degree=3)
    two = _qcusp.verify("rewrite", max_degree=8, hopf_degree=3)
    assert one == two


def test_pair_matches_displayed_value():
    formula, oracle = _qcusp.pair(0, 1, 0, 0, 0, 1, 0)
    assert formula == "1"
    assert oracle == "1"
    formula, oracle = _qcusp.pair(1, 0, 0, 0, 1, 0, 0)
    assert formula == "2"
    assert oracle == "2"


def test_normal_forms():
    assert _qcusp.h_normal_form("KK") == "1"
    assert _qcusp.h_normal_form("DD") == "0"
    assert _qcusp.a_normal_form("ss") == "1"


def test_quantum_number():
    assert _qcusp.quantum_number(3, "1") == "3"
    assert _qcusp.quantum_number(2, "-1") == "0"


def test_classify_diagonal():
    matrix = {
        "n": 2,
        "carrier": "laurent",
        "entries": [
            [{"1": {"re": "1", "im": "0"}}, {}],
            [{}, {"1": {"re": "1", "im": "0"}}],
        ],
    }
    decision = json.loads(_qcusp.classify_json(json.dumps(matrix)))
    assert decision["accept"] is True
    assert decision["case"] == 3
