import itertools

import pytest
from hypothesis import given, settings, strategies as st

from poplab.poset import (
    Comparison, Poset, PosetError, build_poset, chain_poset, comparable, flat_poset,
)


def test_fig1_only_relation():
    p = build_poset(["1", "1'", "2"], [("1", "2")])
    assert p.relations() == [("1", "2")]
    assert comparable(p, "1'", "2") is Comparison.INCOMPARABLE


def test_antichain_has_no_relations():
    assert build_poset(["a", "b", "c"], []).relations() == []


def test_flat_from_relations_matches_builder():
    p = build_poset(["a", "a1", "a2"], [("a", "a1"), ("a", "a2")])
    assert p == flat_poset(2)
    assert comparable(p, "a1", "a2") is Comparison.INCOMPARABLE


def test_flat_poset_sizes():
    assert flat_poset(1) == chain_poset(["a", "a1"])
    assert len(flat_poset(3).elements) == 4
    with pytest.raises(PosetError):
        flat_poset(0)


def test_chain_transitivity():
    c = chain_poset(["1", "2", "3"])
    assert comparable(c, "1", "3") is Comparison.LESS
    assert comparable(c, "3", "1") is Comparison.GREATER
    assert comparable(c, "2", "2") is Comparison.EQUAL


def test_closure_is_applied():
    p = build_poset(["x", "y", "z"], [("x", "y"), ("y", "z")])
    assert p.less("x", "z")
    assert p.covers() == [("x", "y"), ("y", "z")]


@pytest.mark.parametrize("elements, relations, fragment", [
    (["a", "a"], [], "duplicate"),
    (["a", "b"], [("a", "c")], "c"),
    (["a", "b"], [("a", "b"), ("b", "a")], "cycle"),
    (["a"], [("a", "a")], "a"),
])
def test_rejections(elements, relations, fragment):
    with pytest.raises(PosetError, match=fragment):
        build_poset(elements, relations)


def test_cycle_names_offending_pair():
    with pytest.raises(PosetError) as err:
        build_poset(["p", "q", "r"], [("p", "q"), ("q", "r"), ("r", "p")])
    msg = str(err.value)
    assert "p" in msg and "r" in msg


def test_unknown_label_query():
    with pytest.raises(PosetError):
        comparable(chain_poset(["1", "2"]), "1", "9")


def test_json_round_trip(tmp_path):
    p = build_poset(["1'", "1", "2"], [("1", "2")])
    path = tmp_path / "p.json"
    path.write_text(p.to_json())
    assert Poset.load(path) == p
    assert Poset.from_dict(p.to_dict()) == p


def test_dual_and_restrict():
    p = flat_poset(2)
    d = p.dual()
    assert d.less("a1", "a") and not d.less("a", "a1")
    assert p.restrict(["a", "a2"]).relations() == [("a", "a2")]


@st.composite
def posets(draw):
    n = draw(st.integers(1, 6))
    labels = [f"e{i}" for i in range(n)]
    # relations only forward in a random order keep the input acyclic
    order = draw(st.permutations(labels))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    rel = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_poset(labels, rel)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_closure_idempotent(p):
    again = build_poset(p.elements, p.relations())
    assert again == p
    assert build_poset(p.elements, p.covers()) == p


@settings(max_examples=60, deadline=None)
@given(posets())
def test_strict_order_laws(p):
    els = p.elements
    for a in els:
        assert not p.less(a, a)
    for a, b in itertools.permutations(els, 2):
        assert not (p.less(a, b) and p.less(b, a))
        swapped = {Comparison.LESS: Comparison.GREATER, Comparison.GREATER: Comparison.LESS}
        c = comparable(p, a, b)
        assert comparable(p, b, a) is swapped.get(c, c)
    for a, b, c in itertools.permutations(els, 3):
        if p.less(a, b) and p.less(b, c):
            assert p.less(a, c)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_linear_extension_exists(p):
    ext = p.linear_extension()
    assert sorted(ext) == sorted(p.elements)
    pos = {x: i for i, x in enumerate(ext)}
    assert all(pos[a] < pos[b] for a, b in p.relations())
