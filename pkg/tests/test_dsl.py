import json

import pytest
from hypothesis import given, settings, strategies as st

from poplab.data import bundled_poset
from poplab.dsl import (
    PatternSyntaxError, load_pattern, load_poset, parse_pattern, pattern_from_dict,
    pattern_to_dict, print_pattern,
)
from poplab.named import flat_pattern, peak
from poplab.pattern import Gap, PopPattern
from poplab.poset import Poset, chain_poset

NOTATION = {
    "11'2": "fig1", "1'21''": "peak", "2'12''": "valley", "1'-12": "fig1",
    "2-31": None, "[2-13": None, "3-2-1]": None, "1~23": None, "2-1-3": None,
    "122'1'": "fig10", "12'21'": "fig10", "11'1''2": "fig10", "11'21''": "fig10",
    "1'1''12": "fig10", "1'121''": "fig10", "1231'": "fig10", "1321'": "fig10",
    "2131'": "fig10", "11'22'": "fig10", "22'11'": "fig10",
}


@pytest.mark.parametrize("text, poset", sorted(NOTATION.items()))
def test_notation_set_parses_and_round_trips(text, poset):
    P = bundled_poset(poset) if poset else None
    p = parse_pattern(text, P)
    assert print_pattern(p) == text
    assert parse_pattern(print_pattern(p), p.poset if P else None) == p


def test_dashed_letters_and_gaps(fig1):
    p = parse_pattern("1'-12", fig1)
    assert p.letters == ("1'", "1", "2")
    assert p.gaps == (Gap.FREE, Gap.ADJ)


def test_classical_mode_synthesizes_chain():
    p = parse_pattern("2-1-3")
    assert p.poset == chain_poset(["1", "2", "3"])
    assert p.gaps == (Gap.FREE, Gap.FREE)
    assert parse_pattern("1~23").gaps == (Gap.STRICT, Gap.ADJ)


def test_whitespace_ignored():
    assert parse_pattern(" [2 - 1 3 ") == parse_pattern("[2-13")


def test_printer_examples():
    assert print_pattern(peak()) == "1'21''"
    assert print_pattern(parse_pattern("[2-13")) == "[2-13"
    assert print_pattern(PopPattern(Poset(["a"]), ["a"])) == "a"
    assert print_pattern(flat_pattern(2, dashed=True)) == "a-{a1}{a2}"


@pytest.mark.parametrize("text, poset, position, fragment", [
    ("12]3", None, 3, "after"),
    ("1[2", None, 1, "start"),
    ("-12", None, 0, "separator"),
    ("1--2", None, 2, "separator"),
    ("12-", None, 3, "after separator"),
    ("", None, 0, "empty"),
    ("[]", None, 1, "empty segment"),
    ("1'2", None, 0, "needs a poset"),
    ("a2", None, 0, "needs a poset"),
    ("121", None, 2, "duplicate"),
    ("1x", "fig1", 1, "unknown letter"),
    ("1?2", None, 1, "unexpected"),
    ("{ab", None, 0, "unclosed"),
])
def test_syntax_errors_carry_positions(text, poset, position, fragment):
    with pytest.raises(PatternSyntaxError, match=fragment) as err:
        parse_pattern(text, bundled_poset(poset) if poset else None)
    assert err.value.position == position


def test_json_form_round_trip(tmp_path, fig10):
    p = parse_pattern("[1-2'~3", fig10)
    data = pattern_to_dict(p)
    assert pattern_from_dict(json.loads(json.dumps(data))) == p
    path = tmp_path / "p.json"
    path.write_text(json.dumps(data))
    assert load_pattern(f"@{path}") == p


def test_load_poset_refs(tmp_path):
    assert load_poset("@fig10.json") == bundled_poset("fig10")
    assert load_poset({"elements": ["a", "b"], "relations": [["a", "b"]]}) == chain_poset(["a", "b"])
    with pytest.raises(FileNotFoundError):
        load_poset("@nope.json")


LABELS = ["1", "2", "1'", "x", "a1", "b''"]
POSET = Poset(LABELS, [("1", "2"), ("1'", "a1"), ("x", "2")])


@st.composite
def patterns(draw):
    m = draw(st.integers(1, len(LABELS)))
    letters = draw(st.permutations(LABELS))[:m]
    gaps = draw(st.lists(st.sampled_from(list(Gap)), min_size=m - 1, max_size=m - 1))
    return PopPattern(POSET, letters, gaps, draw(st.booleans()), draw(st.booleans()))


@settings(max_examples=300, deadline=None)
@given(patterns())
def test_fuzz_round_trip(p):
    assert parse_pattern(print_pattern(p), POSET) == p


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="12'-~[]{}a ", max_size=10))
def test_fuzz_parser_never_crashes(text):
    try:
        p = parse_pattern(text, POSET)
    except PatternSyntaxError as err:
        assert 0 <= err.position <= len(text)
    except Exception as err:  # only syntax errors may escape
        raise AssertionError(f"{text!r} raised {type(err).__name__}: {err}")
    else:
        assert parse_pattern(print_pattern(p), POSET) == p
