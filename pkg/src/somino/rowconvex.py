"""Row-convex k-omino towers: the counting recurrence and its closed-form solution.

``f_dp(ell, n, k)`` counts row-convex towers of ``n`` k-ominoes on a platform
of width ``ell * k``; ``g_dp(n, k)`` counts free row-convex towers.  The series
side builds F_ell and G from the q-series solutions A_ell, B_ell.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .series import DEFAULT_ORDER, Series, qpoch


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")


@lru_cache(maxsize=None)
def f_dp(ell: int, n: int, k: int) -> int:
    if ell < 1:
        raise ValueError(f"platform width must be >= 1, got {ell}")
    if n < 0:
        return 0
    if n == 0:
        return 1
    # (ell + 2 - i) k - 1 placements for a bottom row of i blocks
    return sum(((ell + 2 - i) * k - 1) * f_dp(i, n - i, k) for i in range(1, ell + 2))


def g_dp(n: int, k: int) -> int:
    if n < 1:
        raise ValueError("g(n) is defined for n >= 1")
    return sum(f_dp(ell, n - ell, k) for ell in range(1, n + 1))


@lru_cache(maxsize=None)
def _zz(j: int, order: int) -> Series:
    """1 / (z; z)_j^2."""
    return (qpoch(1, 1, j, order) ** 2).inverse()


@lru_cache(maxsize=None)
def h_series(j: int, k: int, order: int = DEFAULT_ORDER) -> Series:
    """z^(j(j+1)) ((1-k) z; z)_j."""
    if j < 0:
        raise ValueError("j must be non-negative")
    return qpoch(1 - k, 1, j, order).shift(min(j * (j + 1), order))


def _terms(ell: int, order: int):
    """Indices j whose term z^(ell j) h_j / (z;z)_j^2 is not O(z^order)."""
    j = 0
    while j * (j + 1) + ell * j < order:
        yield j
        j += 1


def _base_term(ell: int, j: int, k: int, order: int) -> Series:
    return (h_series(j, k, order) * _zz(j, order)).shift(ell * j)


@lru_cache(maxsize=None)
def _b_inner(j: int, k: int, order: int) -> Series:
    """sum_{m=1}^{j} (1 + 2/(1 - z^m) - 1/(1 + (k-1) z^m))."""
    total = Series.zero(order)
    for m in range(1, j + 1):
        geo = (1 - Series.monomial(1, m, order)).inverse()
        alt = (1 + Series.monomial(k - 1, m, order)).inverse()
        total = total + 1 + geo * 2 - alt
    return total


@lru_cache(maxsize=None)
def A_series(ell: int, k: int, order: int = DEFAULT_ORDER) -> Series:
    if ell < 1:
        raise ValueError("ell must be >= 1")
    total = Series.zero(order)
    for j in _terms(ell, order):
        total = total + _base_term(ell, j, k, order)
    return total


@lru_cache(maxsize=None)
def B_series(ell: int, k: int, order: int = DEFAULT_ORDER) -> Series:
    if ell < 1:
        raise ValueError("ell must be >= 1")
    total = Series.zero(order)
    for j in _terms(ell, order):
        total = total + _base_term(ell, j, k, order) * (_b_inner(j, k, order) + ell)
    return total


def T_series(s: int, t: int, k: int, order: int = DEFAULT_ORDER) -> Series:
    return A_series(s, k, order) * B_series(t, k, order) - A_series(t, k, order) * B_series(s, k, order)


@dataclass
class ResidualReport:
    """Residual series per label; the check passes when all are zero."""

    residuals: dict

    @property
    def passed(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def failures(self) -> list:
        return [key for key, r in self.residuals.items() if not r.is_zero()]


def recurrence_residual(X: Callable[[int], Series], ell: int, k: int) -> Series:
    """X_{l+2} - 2 X_{l+1} + X_l - z^(l+2) X_{l+2} - (k-1) z^(l+3) X_{l+3}."""
    x0, x1, x2, x3 = X(ell), X(ell + 1), X(ell + 2), X(ell + 3)
    return x2 - x1 * 2 + x0 - x2.shift(ell + 2) - x3.shift(ell + 3) * (k - 1)


def check_solution(X: Callable[[int], Series], k: int, ells: Iterable[int]) -> ResidualReport:
    """Residuals of the second-order platform recurrence for the family ``X``."""
    return ResidualReport({ell: recurrence_residual(X, ell, k) for ell in ells})


def check_boundary(F: Callable[[int], Series], k: int) -> ResidualReport:
    """Residuals of the two boundary equations linking F_1, F_2, F_3."""
    f1, f2, f3 = F(1), F(2), F(3)
    r1 = f1 - 1 - f1.shift(1) * (2 * k - 1) - f2.shift(2) * (k - 1)
    r2 = f2 - 1 - f1.shift(1) * (3 * k - 1) - f2.shift(2) * (2 * k - 1) - f3.shift(3) * (k - 1)
    return ResidualReport({"F1": r1, "F2": r2})


@lru_cache(maxsize=None)
def _denominator(k: int, order: int) -> Series:
    z = lambda c, p: Series.monomial(c, p, order)  # noqa: E731
    c12 = 1 - (z(1, 1) + z(1, 2)) * (2 * k - 1) + z(k * k, 3)
    c13 = (z(2 * k - 1, 1) - 1).shift(3) * (k - 1)
    c23 = z((k - 1) ** 2, 5)
    return c12 * T_series(1, 2, k, order) + c13 * T_series(1, 3, k, order) + c23 * T_series(2, 3, k, order)


@lru_cache(maxsize=None)
def F_series(ell: int, k: int, order: int = DEFAULT_ORDER) -> Series:
    """Generating function of row-convex towers on a platform of width ell*k.

    Coefficients are checked to be integers.
    """
    _check_k(k)
    if ell < 1:
        raise ValueError("ell must be >= 1")
    z = lambda c, p: Series.monomial(c, p, order)  # noqa: E731
    num = (
        (1 + z(k, 1)) * T_series(1, ell, k, order)
        + (z(k, 2) - 1) * T_series(2, ell, k, order)
        + z(k - 1, 3) * T_series(3, ell, k, order)
    )
    den = _denominator(k, order)
    if den[0] == 0:
        raise AssertionError("denominator has zero constant term")
    out = num * den.inverse()
    out.integers()
    return out


def G_series(k: int, order: int = DEFAULT_ORDER) -> Series:
    """Generating function of all row-convex k-omino towers (no constant term)."""
    _check_k(k)
    total = Series.zero(order)
    for ell in range(1, order):
        total = total + F_series(ell, k, order).shift(ell)
    total.integers()
    return total


def f_table(ells: Iterable[int], n_max: int, k: int) -> list[dict]:
    """Rows ``{"n", "ell", "f"}`` from the recurrence, for tabular output."""
    return [{"n": n, "ell": ell, "f": f_dp(ell, n, k)} for ell in ells for n in range(n_max + 1)]
