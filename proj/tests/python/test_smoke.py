import pytest

import repst


def test_dim_poly():
    assert repst.dim_poly(2, "(0 1)") == "1/2*t^2 - 1/2*t"
    assert repst.dim_poly(1) == "t"


def test_compose_frobenius():
    mu = {"dom": 2, "cod": 1, "terms": [{"blocks": [[0, 1, 2]], "coeff": "1"}]}
    delta = {"dom": 1, "cod": 2, "terms": [{"blocks": [[0, 1, 2]], "coeff": "1"}]}
    out = repst.compose(mu, delta)
    assert out["dom"] == 1 and out["cod"] == 1
    assert [t["blocks"] for t in out["terms"]] == [[[0, 1]]]


def test_algebra_round_trip():
    a = repst.build_algebra(2, "(0 1)")
    assert a["ambient"] == 2
    assert repst.check_axioms(a)["all"]
    cert = repst.certify_simple(a)
    assert cert["verdict"] == "certified-simple"
    assert cert["connectedness"] == 1
    assert repst.fiber_match(a, 4) == {"dim": 6, "isomorphic": True}


def test_broken_algebra():
    a = repst.build_algebra(2)
    a["mult"]["terms"].pop()
    assert not repst.check_axioms(a)["all"]


def test_hom_dimension():
    h = {"ambient": 1, "idem": {"dom": 1, "cod": 1, "terms": [{"blocks": [[0, 1]], "coeff": "1"}]}}
    assert repst.hom_dimension(h, h) == 2


def test_groups():
    rows = repst.classify(4)
    assert len(rows) == 11
    assert all(r["simple"] for r in rows)
    assert repst.contains_times(5, 1)["pass"]
    assert repst.sign_multiplicity(4, "(0 1 2)") == 1
    assert repst.sign_multiplicity(4, "(0 1)") == 0


def test_errors():
    with pytest.raises(repst.DomainError):
        repst.contains_times(3, 1)
    with pytest.raises(ValueError):
        repst.compose({"dom": 2, "cod": 1, "terms": []}, {"dom": 2, "cod": 1, "terms": []})


def test_acceptance_criterion():
    ok, title = repst.run_criterion(2)
    assert ok and title
