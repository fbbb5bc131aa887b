"""Truncated power series in one variable ``z`` with exact rational coefficients."""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable

DEFAULT_ORDER = 32


class Series:
    """c_0 + c_1 z + ... + c_{N-1} z^{N-1} + O(z^N).

    Values are immutable.  Binary operations truncate to the smaller order.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[:order] + [Fraction(0)] * (order - len(cs))
        if not cs:
            raise ValueError("series order must be positive")
        self._c = tuple(cs)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> Series:
        return cls((), order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> Series:
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int = DEFAULT_ORDER) -> Series:
        cs = [Fraction(0)] * order
        if 0 <= power < order:
            cs[power] = Fraction(coeff)
        return cls(cs)

    @classmethod
    def poly(cls, terms: dict[int, object], order: int = DEFAULT_ORDER) -> Series:
        """Series from a sparse ``{power: coeff}`` polynomial."""
        cs = [Fraction(0)] * order
        for p, c in terms.items():
            if p < order:
                cs[p] += Fraction(c)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def coefficient(self, i: int) -> Fraction:
        if not 0 <= i < self.order:
            raise IndexError(f"coefficient {i} outside truncation order {self.order}")
        return self._c[i]

    __getitem__ = coefficient

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self._c) if c]
        return f"Series({' + '.join(terms) or '0'} + O(z^{self.order}))"

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Rational)):
            return Series.monomial(other, 0, self.order)
        return NotImplemented

    def __add__(self, other) -> Series:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Series(a + b for a, b in zip(self._c, o._c))

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(-a for a in self._c)

    def __sub__(self, other) -> Series:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Series(a - b for a, b in zip(self._c, o._c))

    def __rsub__(self, other) -> Series:
        return -self + other

    def scale(self, r) -> Series:
        r = Fraction(r)
        return Series(a * r for a in self._c)

    def __mul__(self, other) -> Series:
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = [Fraction(0)] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Series:
        if isinstance(other, Series):
            return self * other.inverse()
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, e: int) -> Series:
        if e < 0:
            return self.inverse() ** (-e)
        out = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> Series:
        a = self._c
        if a[0] == 0:
            raise ValueError("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        r = [inv0]
        for n in range(1, self.order):
            acc = sum((a[i] * r[n - i] for i in range(1, n + 1) if a[i]), Fraction(0))
            r.append(-acc * inv0)
        return Series(r)

    def shift(self, m: int) -> Series:
        """Multiply by z^m (m >= 0), dropping terms beyond the order."""
        if m < 0:
            raise ValueError("shift must be non-negative")
        n = self.order
        return Series(((Fraction(0),) * m + self._c)[:n], n)

    def truncate(self, order: int) -> Series:
        return Series(self._c[:order], order)

    def is_zero(self) -> bool:
        return not any(self._c)

    def valuation(self) -> int | None:
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def integers(self) -> list[int]:
        """Coefficients as ints; raises if any is not integral."""
        if not self.is_integral():
            bad = next(c for c in self._c if c.denominator != 1)
            raise AssertionError(f"non-integral coefficient {bad}")
        return [c.numerator for c in self._c]

    def to_json(self) -> str:
        return json.dumps([f"{c.numerator}/{c.denominator}" for c in self._c])

    @classmethod
    def from_json(cls, text: str) -> Series:
        return cls(Fraction(s) for s in json.loads(text))


def qpoch(a, power_shift: int, j: int, order: int = DEFAULT_ORDER) -> Series:
    """prod_{i=0}^{j-1} (1 - a z^(power_shift + i)) as a series.

    ``qpoch(1, 1, j)`` is (z; z)_j and ``qpoch(1 - k, 1, j)`` is ((1-k)z; z)_j.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    out = Series.one(order)
    for i in range(j):
        out = out * (1 - Series.monomial(a, power_shift + i, order))
    return out
