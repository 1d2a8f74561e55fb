import pytest

from poplab.dsl import parse_pattern
from poplab.named import fresh_copy, incomparable_pair
from poplab.pattern import PatternError
from poplab.perms import avoider_sequence, inv
from poplab.poly import Poly, Q
from poplab.qstats import (
    q_avoiders, q_nonoverlap, q_quasi_avoiders, verify_lemma_B, verify_lemma_split,
    verify_q_multipattern, verify_q_nonoverlap,
)
from poplab.series import q_factorial, q_integer


def test_incomparable_pair_tables():
    p = incomparable_pair()
    a = q_avoiders(p, 4)
    b = q_quasi_avoiders(p, 4)
    assert a[0] == 1 and a[1] == 1 and a[2] == 0
    assert b[2] == 1 + Q
    assert b.to_dict()["2"] == [1, 1]


def test_q_one_gives_counts():
    p = parse_pattern("1-32")
    assert list(q_avoiders(p, 6).at(1).values()) == avoider_sequence(p, 6, start=0)


def test_degree_bound_and_full_sum():
    p = parse_pattern("123")
    a = q_avoiders(p, 6)
    for n in range(7):
        assert a[n].degree("q") <= n * (n - 1) // 2
    everything = q_avoiders([], 5)
    for n in range(6):
        assert everything[n] == q_factorial(n)


def test_table_serialization():
    t = q_avoiders(parse_pattern("12"), 3)
    assert t.to_json() == '{"0": [1], "1": [1], "2": [0, 1], "3": [0, 0, 0, 1]}'
    assert t.series()[3] == Q ** 3
    assert t.n_max == 3


def test_nonoverlap_table_marks_y():
    t = q_nonoverlap(incomparable_pair(), 3)
    assert t[2] == Poly.var("y") * q_integer(2)


@pytest.mark.parametrize("text", ["12", "21", "132", "11'"])
def test_lemma_B(text):
    p = incomparable_pair() if text == "11'" else parse_pattern(text)
    report = verify_lemma_B(p, 6)
    assert report["status"] == "pass", report


def test_split_and_multipattern():
    p = parse_pattern("12")
    sigma = fresh_copy(parse_pattern("21"), "b")
    assert verify_lemma_split(p, sigma, 6)["status"] == "pass"
    blocks = [parse_pattern("12"), fresh_copy(parse_pattern("12"), "b"), fresh_copy(parse_pattern("21"), "c")]
    assert verify_q_multipattern(blocks, 6)["status"] == "pass"


def test_nonoverlap_identity():
    for p in (incomparable_pair(), parse_pattern("123"), parse_pattern("132")):
        assert verify_q_nonoverlap(p, 6)["status"] == "pass"


def test_report_shape_on_failure():
    from poplab.qstats import _report
    r = _report("demo", 0, 2, [Poly(1), Poly(1), Poly(2)], [Poly(1), Poly(1), Poly(3)])
    assert r["status"] == "fail" and r["first_failure"]["n"] == 2


def test_errors():
    with pytest.raises(PatternError):
        q_quasi_avoiders(parse_pattern("1-2"), 3)
    with pytest.raises(PatternError):
        verify_lemma_split(parse_pattern("12"), parse_pattern("21"), 3)
    with pytest.raises(PatternError):
        verify_q_multipattern([parse_pattern("1-2")], 3)


def test_constant_terms():
    a = q_avoiders(parse_pattern("21"), 5)
    assert all(a[n] == 1 for n in range(6))
    assert a[3] == Q ** inv((1, 2, 3)) == 1
