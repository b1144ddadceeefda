import json
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octachain import invariants as inv
from octachain.decomposition import decompose
from octachain.graphs import Variant, build_chain
from octachain.oracles import charpoly_exact, kirchhoff_resistance, spanning_trees, wiener_bfs

BOTH = [Variant.MOBIUS, Variant.CYLINDER]


def test_kirchhoff_closed_examples():
    assert inv.kirchhoff_closed(1, "mobius") == 28
    assert inv.format_decimal(inv.kirchhoff_closed(2, "cylinder")) == "161.14"
    assert inv.format_decimal(inv.kirchhoff_closed(3, "mobius")) == "459.17"
    assert inv.kirchhoff_closed(2, "mobius") == Fraction(804, 5)


@pytest.mark.parametrize(
    "n,variant,expected,tol",
    [(1, "mobius", 28.0, 1e-6), (1, "cylinder", 214 / 7, 1e-6), (5, "mobius", 1811.07, 0.005)],
)
def test_kirchhoff_spectral(n, variant, expected, tol):
    assert inv.kirchhoff_spectral(build_chain(n, variant)) == pytest.approx(expected, abs=tol)


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("variant", BOTH)
def test_spectral_agrees_with_closed(n, variant):
    closed = float(inv.kirchhoff_closed(n, variant))
    assert inv.kirchhoff_spectral(build_chain(n, variant)) == pytest.approx(closed, rel=1e-6)


def test_kirchhoff_cycle():
    assert inv.kirchhoff_cycle(4) == 5
    assert inv.kirchhoff_cycle(3) == 2
    assert inv.kirchhoff_cycle(12) == 143
    with pytest.raises(ValueError):
        inv.kirchhoff_cycle(2)


@pytest.mark.parametrize(
    "n,variant,expected",
    [(1, "mobius", Fraction(9, 4)), (1, "cylinder", Fraction(18, 7)), (2, "mobius", Fraction(24, 5))],
)
def test_sum_reciprocal_examples(n, variant, expected):
    assert inv.sum_reciprocal_ls(n, variant) == expected
    cp = charpoly_exact(decompose(build_chain(n, variant)).l_s)
    # sum 1/beta = e_{d-1} / e_d from the elementary symmetric functions
    assert -cp.coefficient(1) / cp.constant_term == expected


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("variant", BOTH)
def test_sum_reciprocal_against_charpoly(n, variant):
    cp = charpoly_exact(decompose(build_chain(n, variant)).l_s)
    assert (-1) ** (4 * n - 1) * cp.coefficient(1) / cp.constant_term == inv.sum_reciprocal_ls(n, variant)


def test_wiener_mobius_examples():
    assert inv.wiener_closed(2, "mobius") == 328 == wiener_bfs(build_chain(2, "mobius"))
    assert inv.wiener_closed(3, "mobius") == 1020 == wiener_bfs(build_chain(3, "mobius"))


def test_wiener_cylinder_theorem_polynomial_is_off():
    # the theorem polynomial gives 304; breadth-first search gives 336
    assert inv.wiener_closed(2, "cylinder") == 304
    assert wiener_bfs(build_chain(2, "cylinder")) == 336
    assert inv.wiener_index(2, "cylinder") == 336


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("variant", BOTH)
def test_wiener_index_is_bfs(n, variant):
    assert inv.wiener_index(n, variant) == wiener_bfs(build_chain(n, variant))


def test_wiener_small_n():
    assert inv.wiener_index(1, "mobius") == 50
    assert inv.wiener_closed(1, "mobius") == 52
    assert inv.wiener_index(1, "cylinder") == 56


def test_wiener_differences():
    for n in range(1, 50):
        assert inv.wiener_closed(n, "mobius") - inv.wiener_closed(n, "cylinder") == 12 * n
    for n in range(2, 9):
        bfs_diff = wiener_bfs(build_chain(n, "mobius")) - wiener_bfs(build_chain(n, "cylinder"))
        assert bfs_diff == -4 * n


@pytest.mark.parametrize(
    "n,variant,count", [(1, "mobius", 64), (1, "cylinder", 56), (4, "mobius", 6451232)]
)
def test_complexity_examples(n, variant, count):
    assert inv.complexity_closed(n, variant) == count


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("variant", BOTH)
def test_complexity_matrix_tree(n, variant):
    assert inv.complexity_closed(n, variant) == spanning_trees(build_chain(n, variant))


@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("variant", BOTH)
def test_kirchhoff_resistance_small(n, variant):
    assert inv.kirchhoff_closed(n, variant) == kirchhoff_resistance(build_chain(n, variant))


def test_ratio_examples():
    r15 = inv.ratio(15, "mobius")
    assert inv.wiener_index(15, "mobius") == 111660
    assert inv.format_decimal(inv.kirchhoff_closed(15, "mobius")) == "40319.63"
    assert float(r15) == pytest.approx(2.7694, abs=5e-5)
    assert inv.ratio(2, "mobius") == Fraction(328) / Fraction(804, 5)
    assert float(inv.ratio(2, "mobius")) == pytest.approx(2.0398, abs=5e-5)
    assert abs(3 - inv.ratio(1000, "mobius")) < Fraction(5, 1000)


@pytest.mark.parametrize("variant", BOTH)
def test_ratio_increasing_below_three(variant):
    values = [inv.ratio(n, variant) for n in range(2, 201)]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[-1] < 3


def test_cylinder_above_mobius():
    for n in range(1, 201):
        assert inv.kirchhoff_closed(n, "cylinder") > inv.kirchhoff_closed(n, "mobius")


@given(st.integers(min_value=1, max_value=400), st.sampled_from(BOTH))
def test_decomposition_identity(n, variant):
    kf = inv.kirchhoff_closed(n, variant)
    assert kf > 0
    assert kf == inv.kirchhoff_decomposed(n, variant)
    assert 8 * n * Fraction(16 * n * n - 1, 12) == 2 * inv.kirchhoff_cycle(4 * n)
    assert inv.complexity_closed(n, variant) > 0


@pytest.mark.parametrize(
    "value,places,text",
    [
        (Fraction(1, 8), 2, "0.13"),
        (Fraction(-1, 8), 2, "-0.13"),
        (Fraction(804, 5), 2, "160.80"),
        (Fraction(214, 7), 2, "30.57"),
        (Fraction(28), 2, "28.00"),
        (Fraction(2, 3), 6, "0.666667"),
    ],
)
def test_format_decimal(value, places, text):
    assert inv.format_decimal(value, places) == text
    assert inv.decimal_round(value, places) == Decimal(text)


def test_report_closed_form_json():
    rep = inv.report(5, "mobius")
    d = json.loads(rep.to_json())
    assert set(d) == {
        "n", "variant", "kf", "kf_decimal", "wiener", "wiener_matches_theorem",
        "complexity", "ratio_decimal", "method",
    }
    assert d["kf_decimal"] == "1811.07"
    assert Fraction(d["kf"]["num"], d["kf"]["den"]) == inv.kirchhoff_closed(5, "mobius")
    assert d["method"] == "closed_form"
    assert d["wiener_matches_theorem"] is True


def test_report_methods_agree():
    a = inv.report(2, "cylinder", "closed_form")
    b = inv.report(2, "cylinder", "oracle")
    c = inv.report(2, "cylinder", "spectral")
    assert (a.kf, a.wiener, a.complexity) == (b.kf, b.wiener, b.complexity)
    assert float(c.kf) == pytest.approx(float(a.kf), rel=1e-9)
    assert c.complexity == a.complexity
    assert a.wiener_matches_theorem is False


def test_report_n1_flag():
    rep = inv.report(1, "mobius")
    assert rep.wiener == 50 and not rep.wiener_matches_theorem
    assert inv.report(1, "cylinder").complexity == 56
    assert rep.kf > 0 and rep.ratio < 3


def test_report_bad_inputs():
    with pytest.raises(ValueError):
        inv.report(2, "mobius", "guess")
    with pytest.raises(ValueError):
        inv.report(0, "mobius")
    with pytest.raises(ValueError):
        inv.kirchhoff_closed(2, "torus")
