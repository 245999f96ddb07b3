import json
import random

import pytest
from hypothesis import given, settings

from bzero.decision import CONDITIONS, decide_b0, explain
from bzero.models import ResourceError, builtin_b0, holds_identity
from bzero.terms import parse_polynomial as P
from helpers import oracle_equal, random_polynomial, small_polynomials

B0 = builtin_b0()


def test_equal_examples():
    assert decide_b0(P("xyx"), P("x^2y^2")).equal
    assert decide_b0(P("xy + x"), P("xy^2")).equal
    assert decide_b0(P("x + y^2"), P("x^2y^2"))


def test_arrow_mismatch():
    rep = decide_b0(P("xy"), P("yx"))
    assert rep.verdict == "not_equal" and rep.failed_condition == "arrow"
    assert rep.only_in_rhs == (("y", "x"),)
    assert "(y,x) only in the right side" in rep.detail


def test_content_mismatch():
    rep = explain(P("x"), P("y"))
    assert rep.failed_condition == "content"
    assert "letter" in rep.detail and "y" in rep.detail
    assert rep.counterexample is not None


def test_rare_mismatch():
    rep = decide_b0(P("xy"), P("xy + x"))
    assert rep.failed_condition == "rare_set" and rep.only_in_lhs == ("y",)


def test_explain_attaches_first_counterexample():
    rep = explain(P("xy"), P("yx"))
    assert rep.counterexample == {"x": "e11", "y": "e12"}
    assert explain(P("xyx"), P("x^2y^2")).counterexample is None


def test_degenerate_pair_cross_checked():
    p, q = P("x^2y + yx^2"), P("x^2y^2")
    assert decide_b0(p, q).equal == holds_identity(B0, p, q) == oracle_equal(p, q)


def test_report_json():
    data = json.loads(json.dumps(explain(P("xy"), P("yx")).to_json()))
    assert data["verdict"] == "not_equal"
    assert data["failed_condition"] == "arrow"
    assert data["counterexample"] == {"x": "e11", "y": "e12"}
    assert decide_b0(P("x"), P("x")).to_json() == {"verdict": "equal", "failed_condition": None, "detail": ""}


def test_conditions_in_order():
    assert CONDITIONS == ("content", "rare_set", "arrow")


def test_cap():
    p = P("a + b + c")
    with pytest.raises(ResourceError):
        decide_b0(p, p, cap=2)


@settings(max_examples=150, deadline=None)
@given(small_polynomials, small_polynomials)
def test_agrees_with_matrix_oracle(p, q):
    assert decide_b0(p, q).equal == oracle_equal(p, q)


@settings(max_examples=60, deadline=None)
@given(small_polynomials, small_polynomials)
def test_symmetric_and_reflexive(p, q):
    assert decide_b0(p, q).equal == decide_b0(q, p).equal
    assert decide_b0(p, p).equal


def test_congruence_on_equal_pairs():
    rng = random.Random(11)
    checked = 0
    while checked < 40:
        p = random_polynomial(rng, "xyz", 2, 3)
        q = p + random_polynomial(rng, "xyz", 1, 3)
        if not decide_b0(p, q).equal:
            continue
        r = random_polynomial(rng, "xyz", 1, 2)
        if len((p * r).content() | (q * r).content()) > 6:
            continue
        assert decide_b0(p * r, q * r).equal
        assert decide_b0(r * p, r * q).equal
        assert decide_b0(p + r, q + r).equal
        checked += 1
