import pytest

import bpdkit

LARGE = ["..r-----", "r-j.r---", "|...|.r-", "|r--jrjr",
         "||..rjr+", "||..|r++", "||r-++++", "|||r++++"]


def test_counts_for_1432():
    assert len(bpdkit.enumerate_bpd("1432")) == 5
    assert len(bpdkit.enumerate_pd("1432")) == 5
    assert len(bpdkit.enumerate_flagged([2, 1], [2, 3])) == 5


def test_large_example():
    assert bpdkit.bpd_permutation(LARGE) == "12587634"
    rows, letters = bpdkit.phi(LARGE)
    assert rows == [1, 1, 2, 3, 3, 3, 3, 5, 5, 6, 6]
    assert letters == [6, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6]
    assert bpdkit.gamma(LARGE) == [[1, 1, 2, 3], [3, 3, 3], [5, 5], [6, 6]]
    assert bpdkit.eg_pq((rows, letters))[1] == bpdkit.gamma(LARGE)
    assert bpdkit.phi_inverse((rows, letters)) == LARGE


def test_small_examples():
    p, q = bpdkit.eg_pq(([1, 1, 2, 2], [4, 2, 3, 2]))
    assert p == [[2, 3, 4], [3]]
    assert q == [[1, 1, 2], [2]]
    assert bpdkit.jdt([[1, 1, 3, 4], [2, 4, 4, 5], [3, 5]]) == [[1, 3, 4, 4], [2, 4, 5], [3, 5]]
    row, letter, _ = bpdkit.pop(["..r--", ".r+--", "rj|.r", "|rjr+", "||r++"])
    assert (row, letter) == (1, 3)


def test_huang_bump():
    out = bpdkit.huang_bump([".r--", "rj.r", "|.r+", "|r++"], 3, 4)
    assert out == [".r---", "rj.r-", "|.rjr", "|r+-+", "|||r+"]


def test_schubert():
    expected = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"
    for method in ("pd", "bpd", "flagged"):
        assert bpdkit.schubert("1432", method) == expected
    assert bpdkit.schubert("1") == "1"


def test_verify_and_errors():
    report = bpdkit.verify("main", 4, threads=2)
    assert report["pass"] and report["cases"] > 0
    with pytest.raises(bpdkit.BpdkitError):
        bpdkit.verify("nope", 3)
    with pytest.raises(ValueError):
        bpdkit.schubert("2143", "flagged")
