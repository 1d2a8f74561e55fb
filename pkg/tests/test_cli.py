import json

import pytest

from poplab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_bfile(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "11'22'", "--poset", "@fig10.json", "--n", "9")
    assert code == 0
    assert [int(line.split()[1]) for line in out.splitlines()] == [1, 2, 6, 18, 70, 300, 1435, 7910, 47376]
    assert out.splitlines()[0] == "1 1"


def test_count_classical_catalan(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "2-1-3", "--n", "5")
    assert code == 0
    assert out == "1 1\n2 2\n3 5\n4 14\n5 42\n"


def test_count_single_letter(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "a", "--poset", "@single.json", "--n", "3")
    assert (code, out) == (0, "1 0\n2 0\n3 0\n")


def test_count_formats_and_restrict(capsys):
    _, out, _ = run(capsys, "count", "--pattern", "1-32", "--n", "3", "--format", "json")
    assert json.loads(out) == {"offset": 1, "values": [1, 2, 5]}
    _, out, _ = run(capsys, "count", "--pattern", "1-32", "--n", "2", "--format", "csv")
    assert out == "n,a(n)\n1,1\n2,2\n"
    _, out, _ = run(capsys, "count", "--pattern", "1-3-2", "--restrict", "1~23", "--n", "5")
    assert out.splitlines()[-1] == "5 31"


def test_count_jobs_identical(capsys):
    _, one, _ = run(capsys, "count", "--pattern", "1-32", "--n", "7")
    _, two, _ = run(capsys, "count", "--pattern", "1-32", "--n", "7", "--jobs", "2")
    assert one == two


def test_distribution(capsys):
    code, out, _ = run(capsys, "distribution", "--pattern", "312", "--n", "4", "--restrict", "2-1-3")
    assert code == 0
    assert "4,1,6" in out.splitlines()
    _, out, _ = run(capsys, "distribution", "--pattern", "11'", "--poset", "@fig10.json",
                    "--stat", "nonoverlap", "--n", "3", "--format", "json")
    assert json.loads(out)[-1] == {"n": 3, "axes": ["nonoverlap"], "counts": [[1, 6]]}


def test_series(capsys):
    _, out, _ = run(capsys, "series", "--form", "C2", "--order", "5", "--as-counts")
    assert out == "0: 1\n1: 1\n2: 2\n3: 5\n4: 15\n5: 52\n"
    _, out, _ = run(capsys, "series", "--form", "C7", "--params", "k=3", "--order", "3", "--format", "json")
    assert json.loads(out) == ["1", "1", "2", "0"]


def test_bijections(capsys):
    assert run(capsys, "bijection", "faces", "--input", "110x0y01")[1] == "389457621\n"
    assert run(capsys, "bijection", "faces", "--input", "389457621", "--inverse")[1] == "110x0y01\n"
    assert run(capsys, "bijection", "cycles", "--input", "(1 2)(3 4)", "--k", "2")[1] == "3412\n"
    assert run(capsys, "bijection", "cycles", "--input", "(1)", "--k", "1")[1] == "1\n"
    assert run(capsys, "bijection", "cycles", "--input", "42513", "--k", "2", "--inverse")[1] \
        == "(4)(2 5)(1 3)\n"


def test_verify_light(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "table1", "--cap", "5")
    assert code == 0
    assert out.splitlines()[-1].startswith("PASS suite table1")
    code, out, _ = run(capsys, "verify", "--suite", "bijections", "--cap", "0", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_output_is_deterministic(capsys):
    argv = ["distribution", "--pattern", "1-32", "--n", "5", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("argv, fragment", [
    (["count", "--pattern", "1'2", "--n", "3"], "position 0"),
    (["count", "--pattern", "12]3", "--n", "3"], "position 3"),
    (["count", "--pattern", "12", "--n", "30"], "POPLAB_MAX_N"),
    (["series", "--form", "C99"], "unknown form"),
    (["series", "--form", "C2", "--order", "-1"], "order"),
    (["bijection", "faces", "--input", "x0"], "malformed"),
    (["bijection", "cycles", "--input", "(1 2)"], "--k"),
    (["bijection", "cycles", "--input", "(1 2 3)", "--k", "2"], "longer"),
    (["count", "--pattern", "12", "--poset", "@missing.json", "--n", "2"], "missing"),
])
def test_usage_errors(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("poplab: error:")
    assert fragment in err


def test_argparse_errors(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys)[0] == 2
