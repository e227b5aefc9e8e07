from fractions import Fraction

import pytest

import ratmed


def test_anchor_triangle():
    assert ratmed.heron_area(73, 51, 26) == 420
    md = ratmed.medians(73, 51, 26)
    assert md["k"] == Fraction(35, 2)
    assert md["l"] == Fraction(97, 2)
    assert md["m"] is None
    assert ratmed.heron_area(2, 3, 4) is None


def test_big_integers_round_trip():
    n = 2**200 + 7
    assert ratmed.int_sqrt(n * n) == (n, True)
    assert ratmed.int_sqrt(2**70 + 1) == (2**35, False)
    q = Fraction(-(3**90), 2**77)
    assert ratmed.rat_sqrt(q * q) == abs(q)
    assert ratmed.factorize(1099511627791 * 1099511628401) == [(1099511627791, 1), (1099511628401, 1)]
    assert ratmed.is_prime(18446744073709551557)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        ratmed.heron_area(73.0, 51, 26)


def test_sequences_and_orbits():
    assert [ratmed.canonical_S(n) for n in range(10)] == [1, 1, 1, 2, 3, 5, 11, 37, 83, 274]
    assert [ratmed.canonical_T(n) for n in range(10)] == [0, 1, -1, 1, 1, -7, 8, -1, -57, 391]
    assert ratmed.somos5([1, 1, 1, 1, 1], 3) == [1, 1, 1, 1, 1, 2, 3, 5]
    for u, v in ratmed.orbit(-1, 7, 40):
        assert ratmed.invariant_J(u, v) == 5
        assert ratmed.curve_residual(u, v) == 0


def test_family_and_parameters():
    f = ratmed.family_triangle(1)
    assert (f["a"], f["b"], f["c"], f["area"]) == (73, 51, 26, 420)
    assert ratmed.factor_table_row(1)["area"] == "2^2·3·5·7"
    assert ratmed.verify_family(3)["ok"]
    pairs = ratmed.params_from_triangle(73, 51, 26, Fraction(35, 2), Fraction(97, 2))
    assert pairs[0] == (Fraction(1, 3), Fraction(2, 5))
    sides = ratmed.buchholz_sides(Fraction(1, 3), Fraction(2, 5))
    assert sides == (Fraction(292, 225), Fraction(204, 225), Fraction(104, 225))
    s = ratmed.schubert_from_triangle(73, 51, 26, Fraction(35, 2), 420)
    assert ratmed.schubert_residual(*s) == 0
    assert ratmed.triangle_from_schubert(*s, scale=26)["sides"] == (73, 51, 26)


def test_search():
    r = ratmed.run_search(16, workers=2, chunk_size=3)
    assert r["complete"]
    assert [t["sides"] for t in r["triangles"]] == [(73, 51, 26), (875, 626, 291)]
    assert [t["class"] for t in r["triangles"]] == ["family:1", "family:2"]
    assert ratmed.count_params(8) == 341


def test_errors():
    with pytest.raises(ratmed.DomainError) as info:
        ratmed.heron_area(1, 1, 3)
    assert isinstance(info.value, ValueError)
    with pytest.raises(ZeroDivisionError) as zero:
        ratmed.somos5_backward([0, 1, -1, 1, 1], 5)
    assert isinstance(zero.value, ratmed.DomainError)
    assert zero.value.index == 0
    with pytest.raises(ratmed.ResumeError):
        ratmed.run_search(8, checkpoint="/nonexistent/ratmed.ckpt", resume=True)
