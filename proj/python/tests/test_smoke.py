import json
from fractions import Fraction

import pytest

import starrep


def test_toeplitz_basis_words():
    s = starrep.load("toeplitz")
    assert s.check("groebner")["verdict"] == "holds"
    words = s.basis_words(6)
    assert len(words) == 28
    assert s.reduce("u* u u") == "u"
    assert s.is_basis_word("u u*")
    assert not s.is_basis_word("u* u")


def test_completion_of_t3():
    raw = starrep.load("generators: q1 q2\norder: q2 > q1 > q2* > q1*\n"
                       "rel: q1^3 - q1\nrel: q2^3 - q2\n"
                       "rel: (1 - q1 - q2)^3 - (1 - q1 - q2)\n")
    closed = raw.complete(max_degree=8)
    assert closed.status == "closed"
    assert sorted(closed.leading_words) == sorted(["q1^3", "q2^2 q1", "q2^3", "q2 q1 q2 q1^2"])


def test_conditions_report_witnesses():
    s = starrep.load("toeplitz")
    r = s.check("strict", max_length=2)
    assert r["verdict"] == "fails"
    assert r["witnesses"][0]["words"][:2] == ["u*", "u* u"]
    assert "non-expanding" in starrep.conditions()


def test_gram_weights_are_exact():
    g = starrep.load("monomial-x2").gram(10)
    assert g["words"][0] == "1"
    assert all(isinstance(v, Fraction) for v in g["xi"])
    assert all(m >= 1 for m in g["minors"])


def test_hankel():
    assert starrep.hankel_moment(3) == Fraction(1, 5)
    demo = starrep.hankel_demo(6)
    assert demo["minors_positive"] and demo["block_diagonal"]
    assert demo["example"]["norm2"] == Fraction(7, 12)
    n = starrep.hankel_norms("x + x x*")
    assert n["rewriting"] == n["integrals"]


def test_qdeform_functional():
    s = starrep.load("qdeform")
    z = "2 a x + 1/2 x a - 3 a a"
    zz = f"({z}) ({z})*"
    assert s.qdeform_F(zz) == s.qdeform_F_prediction(z)


def test_parse_errors_carry_position():
    with pytest.raises(starrep.ParseError) as info:
        starrep.load("generators: x\nrel: x y\n")
    assert info.value.line == 2
    assert info.value.column == 8


def test_cli_entry_point():
    code, out, _ = starrep.run(["--json", "check", "toeplitz", "--condition", "groebner"])
    assert code == 0
    assert json.loads(out)["verdict"] == "holds"
    assert starrep.run(["check", "toeplitz", "--condition", "bogus"])[0] == 3
