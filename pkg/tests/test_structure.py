import itertools

import pytest
from hypothesis import given, settings

from bzero.models import ResourceError, builtin_b0, evaluate, holds_identity
from bzero.structure import (
    E11,
    E12,
    E22,
    RarePoset,
    arrow,
    blocks,
    is_degenerate,
    is_maximal_antichain,
    is_maximal_chain,
    maximal_antichains,
    maximal_chains,
    normal_form_words,
    rare_letters,
    rare_poset,
    structure_report,
    upper_words,
    val_function,
    word_normal_form,
)
from bzero.terms import Polynomial, parse_polynomial as P, parse_word as W
from helpers import oracle_leq, small_polynomials, small_words

B0 = builtin_b0()


def brute_normal_forms(letters):
    """Words with each letter at most twice, doubled letters adjacent."""
    out = set()
    for n in range(1, 2 * len(letters) + 1):
        for w in itertools.product(letters, repeat=n):
            ok = all(w.count(a) <= 2 for a in letters)
            for a in letters:
                if w.count(a) == 2:
                    i = w.index(a)
                    ok = ok and w[i + 1] == a
            if ok:
                out.add(w)
    return out


def test_normal_forms_single_letter():
    assert list(normal_form_words({"x"})) == [("x",), ("x", "x")]


def test_normal_forms_two_letters():
    got = list(normal_form_words({"x", "y"}))
    assert len(got) == len(set(got)) == 12
    assert set(got) == brute_normal_forms("xy")
    for w in ["xy", "yx", "x^2y", "xy^2", "x", "y", "x^2y^2", "y^2x^2"]:
        assert W(w) in got


def test_normal_forms_three_letters_match_brute_force():
    assert set(normal_form_words("xyz")) == brute_normal_forms("xyz")


def test_normal_forms_need_letters_and_respect_cap():
    with pytest.raises(ValueError):
        list(normal_form_words(set()))
    with pytest.raises(ResourceError):
        list(normal_form_words("abc", cap=2))


def test_upper_words_examples():
    ups = upper_words(P("x^2y + yx^2"))
    for w in ["x^2y", "yx^2", "x^2y^2"]:
        assert W(w) in ups
    assert upper_words(P("x")) == [("x",)]
    # x^2 <= x holds: at x = e12 both sides are 0
    assert set(upper_words(P("x^2"))) == {("x",), ("x", "x")}


def test_rare_letters_examples():
    assert rare_letters(P("x^2y + yx^2")) == set()
    assert rare_letters(P("xy")) == {"x", "y"}
    assert rare_letters(P("x^2")) == set()


def test_arrow_examples():
    a = arrow(P("x^2y + yx^2"))
    assert a("x", "y") and a("y", "x")
    a = arrow(P("xy"))
    assert a("x", "y") and not a("y", "x")
    assert a.witness[("x", "y")] == ("x", "y")
    assert arrow(P("x^2y^2")).pairs == set(itertools.product("xy", repeat=2))


def test_degenerate_examples():
    assert is_degenerate(P("x^2y + yx^2"))
    assert not is_degenerate(P("xy"))
    assert is_degenerate(P("x^2"))


def test_rare_poset_examples():
    P1 = rare_poset(P("xy"))
    assert P1.carrier == ("x", "y") and P1.lt("x", "y") and P1.covers == (("x", "y"),)
    assert rare_poset(P("x^2y + yx^2")).empty
    # the crossing identity takes both letters out of R(xy + yx)
    assert rare_poset(P("xy + yx")).empty


def test_chains_and_antichains():
    chain = RarePoset(("x", "y"), frozenset({("x", "x"), ("y", "y"), ("x", "y")}))
    assert maximal_chains(chain) == [{"x", "y"}]
    assert maximal_antichains(chain) == [{"x"}, {"y"}]
    anti = RarePoset(("x", "y"), frozenset({("x", "x"), ("y", "y")}))
    assert maximal_chains(anti) == [{"x"}, {"y"}]
    assert maximal_antichains(anti) == [{"x", "y"}]
    empty = RarePoset((), frozenset())
    assert maximal_chains(empty) == [frozenset()]
    assert maximal_antichains(empty) == [frozenset()]


def test_val_function_examples():
    p = P("xy")
    assert val_function(p, {"x"}) == {"x": E12, "y": E22}
    assert val_function(p, {"y"}) == {"x": E11, "y": E12}
    with pytest.raises(ValueError):
        val_function(p, {"x", "y"})
    with pytest.raises(ValueError):
        val_function(P("x^2"), set())


def test_word_normal_form():
    assert word_normal_form(W("xyx")) == W("x^2y^2")
    assert word_normal_form(W("x^3")) == W("x^2")
    assert word_normal_form(W("y^2x^2")) == W("x^2y^2")
    assert word_normal_form(W("xyzx")) == W("x^2y^2z^2")
    assert word_normal_form(W("xy")) == W("xy")
    assert blocks(W("x^2y^2zt^2")) == [("square", {"x", "y"}), ("single", {"z"}), ("square", {"t"})]


@settings(max_examples=80, deadline=None)
@given(small_words)
def test_word_normal_form_is_equivalent_and_idempotent(w):
    nf = word_normal_form(w)
    assert holds_identity(B0, Polynomial([w]), Polynomial([nf]))
    assert word_normal_form(nf) == nf
    assert nf in set(normal_form_words(set(w)))


@settings(max_examples=40, deadline=None)
@given(small_polynomials)
def test_upper_words_match_matrix_oracle(p):
    expected = [w for w in normal_form_words(p.content()) if oracle_leq(p, Polynomial([w]))]
    assert upper_words(p) == expected


@settings(max_examples=60, deadline=None)
@given(small_polynomials)
def test_arrow_is_a_quasiorder(p):
    a = arrow(p)
    c = p.content()
    assert all(a(x, x) for x in c)
    for x, y, z in itertools.product(c, repeat=3):
        if a(x, y) and a(y, z):
            assert a(x, z)


@settings(max_examples=60, deadline=None)
@given(small_polynomials)
def test_order_on_rare_letters_is_antisymmetric(p):
    P_ = rare_poset(p)
    for x, y in itertools.combinations(P_.carrier, 2):
        assert not (P_.leq(x, y) and P_.leq(y, x))


@settings(max_examples=60, deadline=None)
@given(small_polynomials)
def test_degenerate_means_full_arrow(p):
    if is_degenerate(p):
        assert arrow(p).pairs == set(itertools.product(p.content(), repeat=2))


@settings(max_examples=60, deadline=None)
@given(small_polynomials)
def test_rare_letters_in_upper_words_form_maximal_chains(p):
    rep = structure_report(p)
    if rep.degenerate:
        return
    for w in rep.upper:
        assert is_maximal_chain(rep.poset, rep.rare & set(w))


@settings(max_examples=60, deadline=None)
@given(small_polynomials)
def test_val_function_evaluates_to_e12(p):
    rep = structure_report(p)
    if rep.degenerate:
        return
    for A in maximal_antichains(rep.poset):
        assert is_maximal_antichain(rep.poset, A)
        assert evaluate(B0, val_function(p, A), p) == E12


def test_structure_json():
    data = structure_report(P("x^2y + yx^2")).to_json()
    assert data["rare"] == [] and data["degenerate"]
    pairs = {(a["from"], a["to"]) for a in data["arrow"]}
    assert {("x", "y"), ("y", "x")} <= pairs
