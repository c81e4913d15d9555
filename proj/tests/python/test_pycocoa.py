import json

import pytest

import pycocoa


def test_chain_lengths():
    assert pycocoa.translate("G a").k == 1
    assert pycocoa.translate("FG a").k == 2
    assert pycocoa.translate("GF a -> (GF b & FG c)").k == 4
    assert pycocoa.translate("a | !a").k == 0


def test_colors_and_membership():
    chain = pycocoa.translate("FG a")
    assert chain.color("{a};{a}") == 2
    assert chain.color(";{a}{}") == 1
    assert chain.accepts(";{a}")
    assert not chain.accepts(";{a}{}")
    assert chain.memberships(";{}") == [True, False]


def test_colors_match_the_formula():
    text = "GF a -> GF b"
    chain = pycocoa.translate(text)
    for word in [";{a}", ";{b}", ";{a}{b}", "{a};{}", "{};{a b}"]:
        assert chain.accepts(word) == pycocoa.eval_lasso(text, word)


def test_verify_report():
    report = pycocoa.translate("FG a | GF b").verify(2, 3)
    assert report["ok"]
    assert report["counterexamples"] == 0
    assert report["first"] is None
    assert sum(report["color_histogram"]) == report["lassos"]


def test_exports():
    chain = pycocoa.translate("G a")
    doc = chain.to_json()
    assert doc["k"] == 1
    json.dumps(doc)
    assert chain.to_hoa(1).startswith("HOA: v1\n")
    assert "Acceptance: 1 Fin(0)" in chain.to_hoa(1)
    assert chain.to_dot().startswith("digraph")
    with pytest.raises(IndexError):
        chain.to_hoa(2)


def test_explicit_atoms_and_nnf():
    chain = pycocoa.translate("G a", aps=["a", "b"])
    assert chain.aps == ["a", "b"]
    assert pycocoa.to_nnf("!(G a)") == "F(!a)"


def test_errors():
    with pytest.raises(ValueError):
        pycocoa.translate("a U")
    with pytest.raises(pycocoa.ResourceLimitError):
        pycocoa.translate("GF a -> (GF b & FG c)", max_states=2)
    with pytest.raises(pycocoa.CocoaError):
        pycocoa.lower_bound_family(0)
    assert issubclass(pycocoa.ResourceLimitError, pycocoa.CocoaError)


def test_lower_bound_formula_text():
    assert "#" in pycocoa.lower_bound_family(1)
