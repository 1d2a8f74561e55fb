import pytest

from poplab.bijections import (
    BijectionError, HypercubeFace, all_faces, avoider_to_cycles, cycles_to_avoider, face_count,
    face_to_good_perm, face_to_good_perm_direct, format_cycles, format_perm, good_perm_to_face,
    good_perms, is_good, parse_cycles, parse_perm, standard_cycles, verify_cycles, verify_faces,
)
from poplab.perms import from_cycles


def test_cycle_map_example():
    pi = from_cycles(parse_cycles("(1 3)(2 5)(4)"), 5)
    assert standard_cycles(pi) == [[4], [2, 5], [1, 3]]
    assert cycles_to_avoider(pi, 2) == (4, 2, 5, 1, 3)
    assert avoider_to_cycles((4, 2, 5, 1, 3), 2) == pi


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_cycle_bijection(n, k):
    assert verify_cycles(n, k)["status"] == "pass"


def test_cycle_errors():
    with pytest.raises(BijectionError):
        cycles_to_avoider((2, 3, 1), 2)
    with pytest.raises(BijectionError):
        avoider_to_cycles((1, 2, 3), 2)
    with pytest.raises(BijectionError):
        avoider_to_cycles((1, 1), 2)
    for bad in ("", "(1 2", "(1 3)", "(1 a)", "(1 2) x", "()"):
        with pytest.raises(BijectionError):
            parse_cycles(bad)


def test_formatting():
    assert format_cycles([[1, 3], [2]]) == "(1 3)(2)"
    assert format_perm((3, 1, 2)) == "312"
    assert format_perm(tuple(range(10, 0, -1))) == "10 9 8 7 6 5 4 3 2 1"
    assert parse_perm("312") == (3, 1, 2)
    assert parse_perm("10 9 8 7 6 5 4 3 2 1") == tuple(range(10, 0, -1))
    with pytest.raises(BijectionError):
        parse_perm("113")
    with pytest.raises(BijectionError):
        parse_perm("")


def test_face_example():
    face = HypercubeFace.parse("110x0y01")
    assert str(face) == "110x0y01"
    assert face.n == 7
    assert face_to_good_perm(face) == (3, 8, 9, 4, 5, 7, 6, 2, 1)
    assert face_to_good_perm_direct("110x0y01") == (3, 8, 9, 4, 5, 7, 6, 2, 1)
    assert is_good((3, 8, 9, 4, 5, 7, 6, 2, 1))
    assert good_perm_to_face((3, 8, 9, 4, 5, 7, 6, 2, 1)) == face


@pytest.mark.parametrize("n", range(1, 7))
def test_face_bijection(n):
    report = verify_faces(n)
    assert report["status"] == "pass", report
    assert report["faces"] == face_count(n) == len(good_perms(n))


def test_face_counts():
    assert [face_count(n) for n in range(1, 6)] == [1, 6, 24, 80, 240]
    assert sum(1 for _ in all_faces(3)) == 24


def test_face_errors():
    for bad in ("0101", "y0x", "x0y2", "xxy", "x"):
        with pytest.raises(BijectionError):
            HypercubeFace.parse(bad)
    with pytest.raises(BijectionError):
        HypercubeFace((0, None, None), 2, 1)
    with pytest.raises(BijectionError):
        HypercubeFace((0, None, 1), 1, 2)
    with pytest.raises(BijectionError):
        HypercubeFace((2, None, None), 1, 2)
    with pytest.raises(BijectionError):
        good_perm_to_face((1, 2, 3))
