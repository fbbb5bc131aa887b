"""Multivariate truncated power series and the tower generating functions.

Monomials are exponent vectors ``(n_1, ..., n_m)`` in the width variables
y_1..y_m.  The block-count variable x is not stored: its exponent always
equals the total degree ``sum(n_i)``, so each y_i carries degree one and the
derivative ``x d/dx`` becomes :func:`euler`.  Series are truncated at total
degree ``order`` (inclusive).
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from itertools import product
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .tower import as_widths

Exp = tuple[int, ...]


class MSeries:
    __slots__ = ("m", "order", "_t")

    def __init__(self, m: int, order: int, terms: Mapping[Exp, object] | None = None):
        if m < 1 or order < 0:
            raise ValueError(f"bad series shape m={m} order={order}")
        self.m = m
        self.order = order
        t: dict[Exp, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != m or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {m} variables")
            if sum(e) <= order:
                c = Fraction(c)
                if c:
                    t[e] = t.get(e, Fraction(0)) + c
        self._t = {e: c for e, c in t.items() if c}

    # construction

    @classmethod
    def constant(cls, m: int, order: int, c=1) -> MSeries:
        return cls(m, order, {(0,) * m: c})

    @classmethod
    def var(cls, i: int, m: int, order: int) -> MSeries:
        e = [0] * m
        e[i] = 1
        return cls(m, order, {tuple(e): 1})

    # access

    @property
    def terms(self) -> dict[Exp, Fraction]:
        return dict(self._t)

    def coefficient(self, e: Sequence[int]) -> Fraction:
        e = tuple(e)
        if sum(e) > self.order:
            raise IndexError(f"exponent {e} beyond truncation degree {self.order}")
        return self._t.get(e, Fraction(0))

    __getitem__ = coefficient

    def constant_term(self) -> Fraction:
        return self._t.get((0,) * self.m, Fraction(0))

    def degree_part(self, d: int) -> dict[Exp, Fraction]:
        return {e: c for e, c in self._t.items() if sum(e) == d}

    def total_by_degree(self) -> list[Fraction]:
        """Sum of coefficients in each total degree 0..order."""
        out = [Fraction(0)] * (self.order + 1)
        for e, c in self._t.items():
            out[sum(e)] += c
        return out

    def is_zero(self) -> bool:
        return not self._t

    def is_nonneg_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self._t.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, MSeries):
            return (self.m, self.order, self._t) == (other.m, other.order, other._t)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.order, frozenset(self._t.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*y^{e}" for e, c in sorted(self._t.items())) or "0"
        return f"MSeries(m={self.m}, order={self.order}: {body})"

    # arithmetic

    def _shape(self, other: MSeries) -> int:
        if other.m != self.m:
            raise ValueError("series have different numbers of variables")
        return min(self.order, other.order)

    def _coerce(self, other):
        if isinstance(other, MSeries):
            return other
        if isinstance(other, (int, Rational)):
            return MSeries.constant(self.m, self.order, other)
        return NotImplemented

    def __add__(self, other) -> MSeries:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t = dict(self._t)
        for e, c in o._t.items():
            t[e] = t.get(e, Fraction(0)) + c
        return MSeries(self.m, self._shape(o), t)

    __radd__ = __add__

    def __neg__(self) -> MSeries:
        return MSeries(self.m, self.order, {e: -c for e, c in self._t.items()})

    def __sub__(self, other) -> MSeries:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> MSeries:
        return -self + other

    def __mul__(self, other) -> MSeries:
        if isinstance(other, (int, Rational)):
            r = Fraction(other)
            return MSeries(self.m, self.order, {e: c * r for e, c in self._t.items()})
        if not isinstance(other, MSeries):
            return NotImplemented
        order = self._shape(other)
        t: dict[Exp, Fraction] = {}
        for e1, c1 in self._t.items():
            d1 = sum(e1)
            if d1 > order:
                continue
            for e2, c2 in other._t.items():
                if d1 + sum(e2) <= order:
                    e = tuple(a + b for a, b in zip(e1, e2))
                    t[e] = t.get(e, Fraction(0)) + c1 * c2
        return MSeries(self.m, order, t)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MSeries:
        return mpow(self, e)

    def truncate(self, order: int) -> MSeries:
        return MSeries(self.m, min(order, self.order), self._t)

    # serialization

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "order": self.order,
            "terms": [
                {"exponent": list(e), "coefficient": f"{c.numerator}/{c.denominator}"}
                for e, c in sorted(self._t.items(), key=lambda ec: (sum(ec[0]), ec[0]))
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> MSeries:
        return cls(d["m"], d["order"], {tuple(t["exponent"]): Fraction(t["coefficient"]) for t in d["terms"]})

    def to_csv(self) -> str:
        """One record per exponent vector up to the order, zeros included."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"n_{i + 1}" for i in range(self.m)] + ["degree", "coefficient"])
        for e in exponents(self.m, self.order):
            c = self._t.get(e, Fraction(0))
            w.writerow(list(e) + [sum(e), str(c)])
        return buf.getvalue()


def exponents(m: int, order: int) -> list[Exp]:
    """All exponent vectors of total degree <= order, by degree then lexicographically."""
    out = [e for e in product(range(order + 1), repeat=m) if sum(e) <= order]
    return sorted(out, key=lambda e: (sum(e), e))


def madd(a: MSeries, b: MSeries) -> MSeries:
    return a + b


def mmul(a: MSeries, b: MSeries) -> MSeries:
    return a * b


def mpow(a: MSeries, e: int) -> MSeries:
    if e < 0:
        return mpow(minverse(a), -e)
    out = MSeries.constant(a.m, a.order)
    base = a
    while e:
        if e & 1:
            out = out * base
        base = base * base
        e >>= 1
    return out


def minverse(a: MSeries) -> MSeries:
    """Multiplicative inverse; needs a non-zero constant term."""
    c0 = a.constant_term()
    if c0 == 0:
        raise ValueError("series with zero constant term has no inverse")
    # 1/a = (1/c0) * sum_j (-r)^j with r = a/c0 - 1 of valuation >= 1
    r = a * (1 / c0) - 1
    out = MSeries.constant(a.m, a.order)
    term = MSeries.constant(a.m, a.order)
    for _ in range(a.order):
        term = term * (-r)
        if term.is_zero():
            break
        out = out + term
    return out * (1 / c0)


def euler(a: MSeries) -> MSeries:
    """Scale every monomial by its total degree (x d/dx in the collapsed grading)."""
    return MSeries(a.m, a.order, {e: c * sum(e) for e, c in a.terms.items()})


def substitute(a: MSeries, replacements: Sequence[MSeries]) -> MSeries:
    """Simultaneously replace each y_i by ``replacements[i]``.

    Replacements must have zero constant term.  Evaluation is Horner-style in
    one variable at a time: the coefficients of each power of y_i are
    substituted recursively in the remaining variables first.
    """
    if len(replacements) != a.m:
        raise ValueError(f"need {a.m} replacement series, got {len(replacements)}")
    for r in replacements:
        if r.m != a.m:
            raise ValueError("replacement has a different number of variables")
        if r.constant_term() != 0:
            raise ValueError("replacement series must have zero constant term")
    order = min([a.order] + [r.order for r in replacements])

    def rec(terms: dict[Exp, Fraction], i: int) -> MSeries:
        if i == a.m:
            return MSeries.constant(a.m, order, terms.get((0,) * a.m, 0))
        groups: dict[int, dict[Exp, Fraction]] = {}
        for e, c in terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(e[i], {})[rest] = c
        acc = MSeries(a.m, order)
        for p in range(max(groups, default=0), -1, -1):
            acc = acc * replacements[i] + rec(groups.get(p, {}), i + 1)
        return acc

    return rec(a.terms, 0)


def restricted_transform(a: MSeries) -> MSeries:
    """y_i -> y_i / (1 + y_i): unrestricted counts to restricted counts."""
    reps = [MSeries.var(i, a.m, a.order) * minverse(1 + MSeries.var(i, a.m, a.order)) for i in range(a.m)]
    return substitute(a, reps)


def unrestricting_transform(a: MSeries) -> MSeries:
    """y_i -> y_i / (1 - y_i): replace every block by a stack of copies."""
    reps = [MSeries.var(i, a.m, a.order) * minverse(1 - MSeries.var(i, a.m, a.order)) for i in range(a.m)]
    return substitute(a, reps)


# tower generating functions


def _ys(widths, order: int) -> tuple[tuple[int, ...], list[MSeries]]:
    ws = tuple(as_widths(widths))
    return ws, [MSeries.var(i, len(ws), order) for i in range(len(ws))]


def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError("truncation degree must be >= 1")


_U_CACHE: dict[tuple[tuple[int, ...], int], MSeries] = {}


def solve_U(widths, order: int) -> MSeries:
    """Solve U = sum_i y_i (1 + U)^(s_i) by fixed-point iteration.

    Degree-d coefficients are final after d sweeps, so ``order`` sweeps suffice.
    """
    _check_order(order)
    ws, ys = _ys(widths, order)
    key = (ws, order)
    if key in _U_CACHE:
        return _U_CACHE[key]
    U = MSeries(len(ws), order)
    for _ in range(order):
        one_u = 1 + U
        U = sum((y * mpow(one_u, s) for y, s in zip(ys, ws)), MSeries(len(ws), order))
    _U_CACHE[key] = U
    return U


def fixed_point_residual(widths, U: MSeries) -> MSeries:
    ws, ys = _ys(widths, U.order)
    return U - sum((y * mpow(1 + U, s) for y, s in zip(ys, ws)), MSeries(len(ws), U.order))


def V1_series(widths, order: int) -> MSeries:
    """Towers on a platform of width one."""
    ws, ys = _ys(widths, order)
    U = solve_U(ws, order)
    inner = sum((y * mpow(1 + U, s - 1) * s for y, s in zip(ys, ws)), MSeries(len(ws), order))
    return minverse(1 - inner)


def V_series(widths, s: int, order: int) -> MSeries:
    """Towers on a platform of width ``s``: V_1 (1 + U)^(s-1)."""
    if s < 1:
        raise ValueError("platform width must be >= 1")
    return V1_series(widths, order) * mpow(1 + solve_U(widths, order), s - 1)


def H_series(widths, s: int, order: int) -> MSeries:
    """Towers on a platform of width ``s`` with nothing left of it: (1 + U)^s."""
    if s < 1:
        raise ValueError("platform width must be >= 1")
    return mpow(1 + solve_U(widths, order), s)


def W_series(widths, b: int, order: int) -> MSeries:
    """Towers with exactly ``b`` blocks in the convex bottom row."""
    if b < 1:
        raise ValueError("b must be >= 1")
    U = solve_U(widths, order)
    W1 = V1_series(widths, order) * U * minverse(1 + U)
    return W1 * mpow(U, b - 1)


def W_total(widths, order: int) -> MSeries:
    """All convex-bottom towers: sum of W_b over b = 1..order."""
    ws = tuple(as_widths(widths))
    U = solve_U(ws, order)
    W1 = W_series(ws, 1, order)
    # sum_b W_1 U^(b-1) = W_1 / (1 - U)
    return W1 * minverse(1 - U)


def require_counting_series(a: MSeries, name: str = "series") -> MSeries:
    if not a.is_nonneg_integral():
        raise AssertionError(f"{name} has a coefficient that is not a non-negative integer")
    return a


def from_counts(m: int, order: int, counts: Mapping[Exp, int] | Iterable[tuple[Exp, int]]) -> MSeries:
    items = counts.items() if isinstance(counts, Mapping) else counts
    return MSeries(m, order, dict(items))
