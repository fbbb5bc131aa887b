import pytest

from somino.enumerator import count_row_convex, enumerate_row_convex
from somino.rowconvex import (
    A_series,
    B_series,
    F_series,
    G_series,
    T_series,
    check_boundary,
    check_solution,
    f_dp,
    g_dp,
    h_series,
)
from somino.series import Series

ORDER = 24


def test_f_dp_small_values():
    for ell in range(1, 6):
        assert f_dp(ell, 0, 3) == 1
    for k in (2, 3, 4):
        assert f_dp(1, 1, k) == 2 * k - 1
    # geometric enumeration is independent of the recurrence
    assert f_dp(1, 2, 2) == len(enumerate_row_convex(1, 2, 2)) == 10
    assert f_dp(2, 1, 2) == len(enumerate_row_convex(2, 1, 2)) == 5


def test_g_dp_small_values():
    assert [g_dp(1, k) for k in (2, 3, 4)] == [1, 1, 1]
    assert g_dp(2, 2) == f_dp(1, 1, 2) + f_dp(2, 0, 2) == 4
    assert [count_row_convex(n, 2) for n in (3, 4)] == [16, 61]
    assert [g_dp(n, 2) for n in (3, 4)] == [16, 61]


def test_h_series():
    assert h_series(0, 2, 8) == Series.one(8)
    assert h_series(1, 2, 8) == Series.poly({2: 1, 3: 1}, 8)
    assert h_series(3, 2, 8).is_zero()


@pytest.mark.parametrize("k", [2, 3, 4])
def test_h_ratio(k):
    for j in range(1, 7):
        step = Series.poly({2 * j: 1, 3 * j: k - 1}, 60)
        assert h_series(j, k, 60) == h_series(j - 1, k, 60) * step


def test_A_low_order():
    # j=1 term z^3 (1+z) / (1-z)^2, hand expanded; the j=2 term starts at z^8
    expected = [1, 0, 0, 1] + [2 * n - 5 for n in range(4, 8)]
    assert A_series(1, 2, 8).integers() == expected
    for ell in range(1, 5):
        assert A_series(ell, 3, 10)[0] == 1


def test_B_constant_terms():
    for ell in range(1, 5):
        assert B_series(ell, 2, 10)[0] == ell
    assert T_series(1, 2, 2, 10)[0] == 1


@pytest.mark.parametrize("k", [2, 3, 4])
def test_recurrence_residuals(k):
    for family in (A_series, B_series, F_series):
        report = check_solution(lambda l: family(l, k, ORDER), k, range(1, 5))
        assert report.passed, report.failures()


def test_constant_family_fails_recurrence():
    report = check_solution(lambda l: Series.one(ORDER), 2, range(1, 3))
    assert not report.passed
    assert report.residuals[1].valuation() == 3


@pytest.mark.parametrize("k", [2, 3, 4])
def test_boundary(k):
    assert check_boundary(lambda l: F_series(l, k, ORDER), k).passed
    assert not check_boundary(lambda l: A_series(l, k, ORDER), k).passed


def test_boundary_at_order_one():
    assert check_boundary(lambda l: Series.one(1), 2).passed


@pytest.mark.parametrize("k", [2, 3, 4])
def test_F_matches_recurrence(k):
    for ell in range(1, 6):
        coeffs = F_series(ell, k, 21).integers()
        assert coeffs[0] == 1
        assert coeffs == [f_dp(ell, n, k) for n in range(21)]
    assert F_series(1, k, 5)[1] == 2 * k - 1


@pytest.mark.parametrize("k", [2, 3, 4])
def test_G_matches_recurrence(k):
    g = G_series(k, 21).integers()
    assert g[0] == 0 and g[1] == 1
    assert g[1:] == [g_dp(n, k) for n in range(1, 21)]
    assert all(c >= 0 for c in g)


def test_G_domino_values():
    assert G_series(2, 5).integers()[1:] == [1, 4, 16, 61]


@pytest.mark.parametrize("k", [2, 3])
def test_geometric_oracle(k):
    for ell in range(1, 4):
        assert len(enumerate_row_convex(ell, 0, k)) == 1
        for n in range(6):
            assert len(enumerate_row_convex(ell, n, k)) == f_dp(ell, n, k)


def test_row_convex_positions():
    # one block on a platform of width ell*k: (ell+1)k - 1 positions
    assert len(enumerate_row_convex(1, 1, 2)) == 3
    assert len(enumerate_row_convex(2, 1, 2)) == 5
