import json
import math
from collections import Counter

import pytest

from conftest import all_perms
from poplab.dsl import parse_pattern
from poplab.named import (
    alternating_pattern, counimodal_pattern, fig_pattern, flat_pattern, flat_split_pattern,
    incomparable_pair,
)
from poplab.pattern import contains
from poplab.perms import (
    DistributionTable, EnumerationLimitError, avoider_sequence, avoiders, circular_maxima,
    complement, count_avoiders, cycles, des, descents, distribution, double_falls, double_rises,
    from_cycles, gen_perms, gen_words, inv, inverse, is_alternating, joint_distribution,
    left_to_right_minima, maj, maj_sigma, modified_maxima, modified_minima, nonoverlap_distribution,
    peaks, place_sigma, reverse, stat_distribution, sweep, to_bfile, valleys,
    word_nonoverlap_distribution,
)


def test_generation_sizes_and_order():
    assert list(gen_perms(0)) == [()]
    assert list(gen_perms(3)) == all_perms(3)
    assert len(list(gen_words(2, 3))) == 9
    assert list(gen_perms(3, first=2)) == [(2, 1, 3), (2, 3, 1)]


def test_statistics_examples():
    assert inv((3, 1, 4, 2)) == 3
    assert maj((3, 1, 4, 2)) == 4
    assert descents((3, 1, 4, 2)) == [1, 3]
    assert des((3, 1, 4, 2)) == 2
    assert (modified_maxima((2, 1)), double_falls((2, 1)), modified_minima((2, 1)), double_rises((2, 1))) \
        == (1, 1, 0, 0)
    sigma = parse_pattern("21")
    assert place_sigma(sigma, (3, 1, 4, 2)) == {1, 3}
    assert maj_sigma(sigma, (3, 1, 4, 2)) == 4
    assert left_to_right_minima((3, 4, 1, 2)) == [3, 1]


def test_inverse_reverse_complement():
    pi = (2, 4, 1, 3)
    assert inverse(pi) == (3, 1, 4, 2)
    assert inverse(inverse(pi)) == pi
    assert reverse(pi) == (3, 1, 4, 2)
    assert complement(pi) == (3, 1, 4, 2)


def test_cycles_round_trip():
    for pi in all_perms(5):
        cyc = cycles(pi)
        assert all(c[0] == min(c) for c in cyc)
        assert from_cycles(cyc) == pi
    assert cycles((2, 1, 4, 3)) == [[1, 2], [3, 4]]


def test_circular_maxima_definition():
    assert circular_maxima((1, 3, 2)) == 1
    assert circular_maxima((2, 1, 4, 3)) == 1
    assert circular_maxima((1, 3, 2, 5, 4)) == 2
    assert circular_maxima((1,)) == 0


def test_peaks_valleys_complement():
    for n in range(8):
        for pi in gen_perms(n):
            assert peaks(pi) == valleys(complement(pi))


def test_modified_extrema_identity():
    for n in range(1, 9):
        for pi in gen_perms(n):
            mx, mn = modified_maxima(pi), modified_minima(pi)
            assert mx == mn + 1
            assert mx + mn + double_rises(pi) + double_falls(pi) == n


def test_alternating_counts():
    euler_zigzag = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
    assert [sum(map(is_alternating, gen_perms(n))) for n in range(10)] == euler_zigzag


def test_avoider_examples(fig1, fig10):
    assert avoider_sequence(parse_pattern("11'22'", fig10), 9) == [1, 2, 6, 18, 70, 300, 1435, 7910, 47376]
    assert count_avoiders(fig_pattern("11'2", "fig1"), 4) == math.comb(4, 2)
    pair = [parse_pattern("11'22'", fig10), parse_pattern("22'11'", fig10)]
    assert avoider_sequence(pair, 8, start=3) == [2 * math.comb(n, n // 2) for n in range(3, 9)]


def test_avoiders_agree_with_filtering():
    pats = [parse_pattern("1-23"), alternating_pattern(3)]
    for n in range(7):
        expect = [pi for pi in gen_perms(n)
                  if not any(contains(p, pi) for p in pats)]
        assert list(avoiders(pats, n)) == expect


def test_right_anchored_pruning():
    p = parse_pattern("12]")
    for n in range(6):
        assert count_avoiders(p, n) == sum(1 for pi in gen_perms(n) if not (n >= 2 and pi[-2] < pi[-1]))


def test_distribution_examples():
    assert distribution(flat_split_pattern(1, 1), 4)[0] == 8
    assert distribution(flat_pattern(1), 3).as_dict() == {0: 1, 1: 4, 2: 1}
    d = distribution(parse_pattern("312"), 4, restriction=[parse_pattern("2-1-3")])
    assert d[1] == 6
    assert d.total() == 14


def test_nonoverlap_examples(fig10):
    p = incomparable_pair()
    assert nonoverlap_distribution(p, 3).as_dict() == {1: 6}
    assert nonoverlap_distribution(p, 0).as_dict() == {0: 1}
    w = word_nonoverlap_distribution(p, 3, 2)
    assert w.as_dict() == {1: 8}
    assert w.total() == 2 ** 3


def test_table_totals():
    for n in range(6):
        assert stat_distribution(inv, n).total() == math.factorial(n)
        assert distribution(parse_pattern("1-2"), n).total() == math.factorial(n)


def test_joint_distribution():
    t = joint_distribution(maj, inv, 1)
    assert t.counts == {(0, 0): 1}
    sigma = counimodal_pattern(4, 2)
    for n in range(1, 7):
        a = joint_distribution(lambda p: maj_sigma(sigma, inverse(p)), maj, n).counts
        b = joint_distribution(lambda p: maj_sigma(sigma, inverse(p)), inv, n).counts
        assert a == b


def test_descent_margin_is_eulerian_by_maj():
    sigma = parse_pattern("21")
    for n in range(1, 7):
        t = joint_distribution(lambda p: maj_sigma(sigma, inverse(p)), maj, n)
        margin = Counter()
        for (_, m), c in t.counts.items():
            margin[m] += c
        assert margin == Counter(maj(p) for p in gen_perms(n))


def test_sweep_jobs_deterministic():
    p = parse_pattern("1-32")
    one = sweep(7, des, [p], jobs=1)
    two = sweep(7, des, [p], jobs=2)
    assert one == two


def test_trivial_bijection_invariance():
    for text in ("1-32", "12-3", "1~23", "[2-13"):
        p = parse_pattern(text)
        for n in range(7):
            base = count_avoiders(p, n)
            assert count_avoiders(p.reverse(), n) == base
            assert count_avoiders(p.complement(), n) == base


def test_enumeration_limit(monkeypatch):
    with pytest.raises(EnumerationLimitError):
        count_avoiders(parse_pattern("12"), 12)
    monkeypatch.setenv("POPLAB_MAX_N", "4")
    with pytest.raises(EnumerationLimitError):
        count_avoiders(parse_pattern("12"), 5)


def test_table_serialization():
    t = stat_distribution(des, 3)
    assert t.to_csv() == "des,count\n0,1\n1,4\n2,1\n"
    assert json.loads(t.to_json()) == {"n": 3, "axes": ["des"], "counts": [[0, 1], [1, 4], [2, 1]]}
    assert t.row() == [1, 4, 1]
    assert to_bfile([1, 2, 5]) == "1 1\n2 2\n3 5\n"
    assert isinstance(t, DistributionTable)
