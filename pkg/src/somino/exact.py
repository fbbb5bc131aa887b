"""Exact closed-form counts for S-omino towers.

Everything here works on Python integers and ``Fraction``; no floats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .tower import TowerError, WidthList, as_widths


def binomial(top: int, k: int) -> int:
    """C(top, k), zero outside 0 <= k <= top."""
    if k < 0 or top < 0 or k > top:
        return 0
    return math.comb(top, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise TowerError(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise TowerError(f"parts {list(parts)} do not sum to {n}")
    out, rest = 1, n
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


def rising(x: Fraction | int, j: int) -> Fraction:
    """Rising Pochhammer symbol (x)_j = x (x+1) ... (x+j-1)."""
    out = Fraction(1)
    for i in range(j):
        out *= x + i
    return out


def hyp2f1_terminating(a, b: int, c, z) -> Fraction:
    """Exact 2F1(a, b; c; z) for a non-positive integer ``b``.

    The sum runs over j = 0..-b; it raises if (c)_j vanishes before then.
    """
    if int(b) != b or b > 0:
        raise TowerError(f"b must be a non-positive integer, got {b}")
    a, c, z = Fraction(a), Fraction(c), Fraction(z)
    total = Fraction(0)
    term = Fraction(1)  # (a)_j (b)_j / (c)_j * z^j / j!
    for j in range(-int(b) + 1):
        if j:
            denom = (c + j - 1) * j
            if denom == 0:
                raise TowerError(f"2F1 has a pole: (c)_{j} = 0 for c = {c}")
            term = term * (a + j - 1) * (b + j - 1) * z / denom
        total += term
    return total


def _check_counts(widths, nvec: Sequence[int]) -> tuple[WidthList, tuple[int, ...], int]:
    ws = as_widths(widths)
    nv = tuple(int(x) for x in nvec)
    if len(nv) != len(ws):
        raise TowerError(f"nvec has {len(nv)} entries for {len(ws)} widths")
    if any(x < 0 for x in nv):
        raise TowerError(f"nvec entries must be non-negative: {nv}")
    n = sum(nv)
    if n < 1:
        raise TowerError("a tower needs at least one block")
    return ws, nv, n


def _area(ws: WidthList, nv: Sequence[int]) -> int:
    return sum(s * k for s, k in zip(ws, nv))


def count_Wb(widths, nvec: Sequence[int], b: int) -> int:
    """Towers with block counts ``nvec`` and exactly ``b`` blocks in the convex bottom row."""
    ws, nv, n = _check_counts(widths, nvec)
    if not 1 <= b <= n:
        raise TowerError(f"b must lie in 1..{n}, got {b}")
    return multinomial(n, nv) * binomial(_area(ws, nv) - 1, n - b)


def count_total(widths, nvec: Sequence[int], method: str = "sum") -> int:
    """All convex-bottom towers with block counts ``nvec``.

    ``method="sum"`` adds up :func:`count_Wb`; ``method="hyp2f1"`` uses the
    hypergeometric closed form.  Both are exact.
    """
    ws, nv, n = _check_counts(widths, nvec)
    if method == "sum":
        return sum(count_Wb(ws, nv, b) for b in range(1, n + 1))
    if method == "hyp2f1":
        excess = sum((s - 1) * k for s, k in zip(ws, nv))
        f = hyp2f1_terminating(1, 1 - n, 1 + excess, -1)
        val = multinomial(n, nv) * binomial(_area(ws, nv) - 1, n - 1) * f
        if val.denominator != 1:
            raise AssertionError(f"non-integral tower total {val}")
        return val.numerator
    raise TowerError(f"unknown method {method!r}")


def count_U(widths, nvec: Sequence[int]) -> int:
    ws, nv, n = _check_counts(widths, nvec)
    val = Fraction(multinomial(n, nv) * binomial(_area(ws, nv), n - 1), n)
    if val.denominator != 1:
        raise AssertionError(f"non-integral count of U {val}")
    return val.numerator


@dataclass(frozen=True)
class HnSpec:
    """Letter multiplicities of a generalised Dyck path.

    ``pairs`` holds ``(t, l)``: the up-letter ``l`` occurs ``t`` times.  The
    down-letter 0 occurs ``n = sum(t * l)`` times.
    """

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs):
        ps = tuple((int(t), int(l)) for t, l in pairs)
        if not ps:
            raise TowerError("an h_n specification needs at least one pair")
        if any(t < 1 or l < 1 for t, l in ps):
            raise TowerError(f"pairs must be positive integers: {ps}")
        if len({l for _, l in ps}) != len(ps):
            raise TowerError(f"step sizes must be distinct: {ps}")
        object.__setattr__(self, "pairs", ps)

    @property
    def n(self) -> int:
        return sum(t * l for t, l in self.pairs)

    @property
    def ups(self) -> int:
        return sum(t for t, _ in self.pairs)

    @property
    def length(self) -> int:
        return self.n + self.ups

    @classmethod
    def from_towers(cls, widths, nvec: Sequence[int]) -> HnSpec:
        """Dyck-path letters matching towers of U: pairs ``(n_i, s_i - 1)``."""
        ws, nv, _ = _check_counts(widths, nvec)
        return cls((k, s - 1) for s, k in zip(ws, nv) if k)


def count_dyck(spec: HnSpec) -> int:
    """Number of h_n-Dyck paths (prefix sums non-negative, total zero)."""
    downs = spec.n
    parts = [downs] + [t for t, _ in spec.pairs]
    val = Fraction(multinomial(sum(parts), parts), 1 + downs)
    if val.denominator != 1:
        raise AssertionError(f"non-integral Dyck path count {val}")
    return val.numerator
