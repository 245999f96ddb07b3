import itertools
import json

import numpy as np
import pytest
from hypothesis import given, settings

from bzero.models import (
    DEFAULT_ALPHABET_CAP,
    ResourceError,
    UnboundLetterError,
    builtin_b0,
    builtin_b2,
    counterexample,
    evaluate,
    format_valuation,
    holds_identity,
    holds_leq,
    load_model,
    make_model,
    restrict,
    resolve_model,
    validate_model,
)
from bzero.terms import parse_polynomial as P
from helpers import B0_MATRICES, matadd, matmul, small_polynomials, oracle_equal

B0 = builtin_b0()
B2 = builtin_b2()


def el(m, label):
    return m.index(label)


def op(m, table, a, b):
    return m.elements[int(getattr(m, table)[el(m, a), el(m, b)])]


def test_b0_tables_match_matrices():
    for a, b in itertools.product(B0_MATRICES, repeat=2):
        prod = matmul(B0_MATRICES[a], B0_MATRICES[b])
        total = matadd(B0_MATRICES[a], B0_MATRICES[b])
        assert B0_MATRICES[op(B0, "mul", a, b)] == prod
        assert B0_MATRICES[op(B0, "add", a, b)] == total


def test_b0_examples():
    assert op(B0, "mul", "e11", "e12") == "e12"
    assert op(B0, "mul", "e12", "e12") == "0"
    assert op(B0, "add", "e11", "e22") == "0"


def test_b2_examples():
    assert op(B2, "mul", "e21", "e12") == "e22"
    assert op(B2, "mul", "e12", "e21") == "e11"
    assert op(B2, "add", "e12", "e12") == "e12"


def test_builtins_validate():
    assert validate_model(B0).ok
    assert validate_model(B2).ok


def test_b0_is_restriction_of_b2():
    assert restrict(B2, ["0", "e11", "e12", "e22"], "B0") == B0


def test_restrict_rejects_unclosed_subset():
    with pytest.raises(ValueError):
        restrict(B2, ["e12", "e21"])


def test_noncommutative_addition_reported():
    m = make_model("bad", ["a", "b"], [[0, 0], [1, 1]], [[0, 0], [0, 0]])
    rep = validate_model(m)
    assert not rep.ok
    assert rep.violations[0].axiom == 1
    assert rep.violations[0].witness == (0, 1)
    assert "axiom 1" in rep.violations[0].describe(m)


def test_model_table_shape_checked():
    with pytest.raises(ValueError):
        make_model("m", ["a"], [[0, 0]], [[0]])
    with pytest.raises(ValueError):
        make_model("m", ["a"], [[1]], [[0]])


def test_evaluate_examples():
    e12, e22, e11 = el(B0, "e12"), el(B0, "e22"), el(B0, "e11")
    assert evaluate(B0, {"x": e12, "y": e22}, P("xy")) == e12
    assert evaluate(B0, {"x": e11}, P("x^2")) == e11
    assert evaluate(B0, {"x": e12}, P("x^2 + x")) == el(B0, "0")
    with pytest.raises(UnboundLetterError):
        evaluate(B0, {"x": e11}, P("xy"))


def test_identity_examples():
    assert holds_identity(B0, P("xyx"), P("x^2y^2"))
    assert holds_identity(B0, P("x + y^2"), P("x^2y^2"))
    assert not holds_identity(B0, P("xy"), P("yx"))


def test_leq_examples():
    assert holds_leq(B0, P("xy + zy + zt"), P("xt"))
    assert holds_leq(B0, P("xy^2"), P("x"))
    assert not holds_leq(B0, P("x"), P("xy^2"))
    v = counterexample(B0, P("x"), P("x + xy^2"))
    assert format_valuation(B0, v) == {"x": "e11", "y": "0"}
    quoted = {"x": el(B0, "e11"), "y": el(B0, "e22")}
    assert evaluate(B0, quoted, P("x + xy^2")) != evaluate(B0, quoted, P("x"))


def test_counterexample_examples():
    assert format_valuation(B0, counterexample(B0, P("xy"), P("yx"))) == {"x": "e11", "y": "e12"}
    assert counterexample(B0, P("x"), P("x")) is None
    assert counterexample(B0, P("x^2y^2"), P("y^2x^2")) is None


def test_counterexample_is_first_in_enumeration_order():
    p, q = P("xy + z"), P("yx + z")
    letters = ["x", "y", "z"]
    first = None
    for combo in itertools.product(range(B0.size), repeat=3):
        v = dict(zip(letters, combo))
        if evaluate(B0, v, p) != evaluate(B0, v, q):
            first = v
            break
    assert counterexample(B0, p, q) == first


def test_alphabet_cap():
    big = P("+".join("abcdefghij"[: DEFAULT_ALPHABET_CAP + 1]))
    with pytest.raises(ResourceError):
        holds_identity(B0, big, big)
    assert holds_identity(B0, P("x+y"), P("y+x"), cap=2)
    with pytest.raises(ResourceError):
        holds_identity(B0, P("x+y"), P("y+x"), cap=1)


def test_model_files(tmp_path):
    path = tmp_path / "b0.json"
    path.write_text(json.dumps(B0.to_json()))
    m, rep = load_model(path)
    assert m == B0 and rep.ok
    assert resolve_model(str(path)) == B0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "bad", "elements": ["a", "b"], "add": [[0, 0], [1, 1]], "mul": [[0, 0], [0, 0]]}))
    with pytest.raises(ValueError):
        resolve_model(str(bad))


def test_tables_are_frozen():
    with pytest.raises(ValueError):
        B0.mul[0, 0] = 1


@settings(max_examples=60, deadline=None)
@given(small_polynomials, small_polynomials)
def test_holds_identity_matches_matrix_oracle(p, q):
    assert holds_identity(B0, p, q) == oracle_equal(p, q)


@settings(max_examples=60, deadline=None)
@given(small_polynomials, small_polynomials)
def test_b0_identities_are_symmetric(p, q):
    assert holds_identity(B0, p, q) == holds_identity(B0, q, p)
    assert holds_identity(B0, p, p)


@settings(max_examples=40, deadline=None)
@given(small_polynomials, small_polynomials)
def test_b0_satisfies_whatever_b2_does(p, q):
    if holds_identity(B2, p, q):
        assert holds_identity(B0, p, q)


def test_eval_all_matches_scalar_evaluation():
    from bzero.models import eval_all
    p = P("xy + yzx")
    vals = eval_all(B0, p, ["x", "y", "z"])
    for n, combo in enumerate(itertools.product(range(B0.size), repeat=3)):
        assert vals[n] == evaluate(B0, dict(zip("xyz", combo)), p)
    assert isinstance(vals, np.ndarray)
