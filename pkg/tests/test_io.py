import json
from fractions import Fraction

import pytest

from influence import corpus
from influence.core import InvalidValueError, UnknownAgentError
from influence.io import (FormatError, load_network, load_script, network_from_json,
                          network_to_json, script_from_json, sociogram_from_json,
                          sociogram_to_json)
from influence.proofkit import Lighthouse, ModusPonens, Reflexivity
from influence.syntax import FormulaSyntaxError


def test_corpus_values(n1, n2, s1):
    assert n1.thresholds == {"p": 7, "q": 1, "r": 2}
    assert n2.thresholds == {"p": Fraction(11, 2), "q": 1, "r": 0}
    assert n1.sociogram == n2.sociogram == s1
    assert s1.weights == {("p", "q"): 2, ("q", "p"): 1, ("q", "r"): 3,
                          ("r", "p"): 5, ("r", "q"): 4}


def test_rational_spellings():
    obj = {"agents": ["a", "b"],
           "weights": [{"from": "a", "to": "b", "w": 3}, {"from": "b", "to": "a", "w": " 6/4 "}],
           "thresholds": {"a": "5.5", "b": "0.125"}}
    n = network_from_json(obj)
    assert n.weight("a", "b") == 3 and n.weight("b", "a") == Fraction(3, 2)
    assert n.thresholds == {"a": Fraction(11, 2), "b": Fraction(1, 8)}


def test_json_decimal_numbers_are_exact(tmp_path):
    path = tmp_path / "n.json"
    path.write_text('{"agents": ["a"], "thresholds": {"a": 0.1}}')
    assert load_network(path).threshold("a") == Fraction(1, 10)


def test_network_json_roundtrip(n2):
    obj = network_to_json(n2)
    assert obj["thresholds"] == {"p": "11/2", "q": "1", "r": "0"}
    assert network_from_json(json.loads(json.dumps(obj))) == n2


def test_sociogram_json_is_canonical(s1):
    obj = sociogram_to_json(s1)
    assert obj["agents"] == ["p", "q", "r"]
    assert [(e["from"], e["to"]) for e in obj["weights"]] == sorted(s1.weights)


@pytest.mark.parametrize("obj, error", [
    ({"agents": ["p", "p"]}, FormatError),
    ({"agents": "p"}, FormatError),
    ({"agents": ["p"], "weights": [{"from": "p", "to": "z", "w": 1}]}, UnknownAgentError),
    ({"agents": ["p"], "weights": [{"from": "p", "to": "p"}]}, FormatError),
    ({"agents": ["p"], "weights": [{"from": "p", "to": "p", "w": "-1"}]}, InvalidValueError),
    ({"agents": ["p"], "weights": [{"from": "p", "to": "p", "w": True}]}, FormatError),
    ({"agents": ["p", "q"], "weights": [{"from": "p", "to": "q", "w": 1},
                                        {"from": "p", "to": "q", "w": 2}]}, FormatError),
])
def test_bad_sociograms(obj, error):
    with pytest.raises(error):
        sociogram_from_json(obj)


def test_bad_networks():
    with pytest.raises(FormatError):
        network_from_json({"agents": ["p"]})
    with pytest.raises(FormatError):
        network_from_json({"agents": ["p"], "thresholds": {"p": "x"}})


def test_script_parsing(s1):
    obj = {"sociogram": json.loads(corpus.path("s1.json").read_text()),
           "lines": [{"formula": "{p,q}|>{p}", "by": "reflexivity"},
                     {"formula": "{p,q}|>{r} -> {q}|>{r}",
                      "by": {"lighthouse": {"A": ["r"], "B": ["p", "q"], "C": {"r": ["q"]}}}},
                     {"formula": "false", "by": {"mp": [1, 0]}}]}
    script = script_from_json(obj)
    assert script.sociogram == s1
    assert script.lines[0].by == Reflexivity()
    assert script.lines[1].by == Lighthouse({"r"}, {"p", "q"}, {"r": {"q"}})
    assert script.lines[2].by == ModusPonens(1, 0)


@pytest.mark.parametrize("by", ["modus", {"mp": [1]}, {"mp": [0, "1"]}, {"mp": [True, 0]},
                                {"lighthouse": {"A": ["r"]}}, {"x": 1, "y": 2}])
def test_bad_justifications(by):
    obj = {"sociogram": {"agents": ["p"]}, "lines": [{"formula": "false", "by": by}]}
    with pytest.raises(FormatError):
        script_from_json(obj)


def test_script_formulas_checked_against_sociogram():
    obj = {"sociogram": {"agents": ["p"]}, "lines": [{"formula": "{q}|>{p}", "by": "tautology"}]}
    with pytest.raises(UnknownAgentError):
        script_from_json(obj)
    obj["lines"][0]["formula"] = "{p}|>"
    with pytest.raises(FormulaSyntaxError):
        script_from_json(obj)


def test_script_sociogram_path_is_relative_to_script(prop_scripts, s1):
    assert load_script(corpus.path("prop1.proof")).sociogram == s1


def test_invalid_json(tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{")
    with pytest.raises(FormatError):
        load_network(path)
