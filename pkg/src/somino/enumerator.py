"""Exhaustive tower enumeration, used as the independent oracle for every formula.

Towers are grown one row at a time.  A row is a left-to-right sequence of
blocks, each sharing at least one column with the row below (or with the
platform).  Since a tower determines its rows, every tower is produced exactly
once and no deduplication is needed; the tests check this anyway.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .tower import Block, ClassSpec, Kind, Tower, TowerError, WidthList, as_widths

DEFAULT_CAP = 8

Row = tuple[tuple[int, int], ...]  # (offset, width) pairs, left to right


@dataclass(frozen=True)
class EnumSpec:
    widths: WidthList
    nvec: tuple[int, ...]
    cls: ClassSpec
    restricted: bool = False
    row_convex: bool = False

    def __init__(self, widths, nvec: Sequence[int], cls: ClassSpec, restricted: bool = False, row_convex: bool = False):
        ws = as_widths(widths)
        nv = tuple(int(x) for x in nvec)
        if len(nv) != len(ws) or any(x < 0 for x in nv):
            raise TowerError(f"nvec {nv} does not fit widths {tuple(ws)}")
        if sum(nv) < 1 and cls.platform is None:
            raise TowerError("towers without a platform need at least one block")
        object.__setattr__(self, "widths", ws)
        object.__setattr__(self, "nvec", nv)
        object.__setattr__(self, "cls", cls)
        object.__setattr__(self, "restricted", bool(restricted))
        object.__setattr__(self, "row_convex", bool(row_convex or cls.kind is Kind.ROW_CONVEX))

    @property
    def n(self) -> int:
        return sum(self.nvec)


class _Search:
    """Row-by-row search over the towers of one EnumSpec."""

    def __init__(self, spec: EnumSpec):
        self.spec = spec
        self.widths = tuple(spec.widths)
        self.order = sorted(range(len(self.widths)), key=lambda i: self.widths[i])
        self.wmax = max(self.widths)
        self.left_wall = spec.cls.left_wall
        self._memo: dict = {}

    def rows_above(self, below: Row, remaining: tuple[int, ...], on_platform: bool = False) -> Iterator[tuple[Row, tuple[int, ...]]]:
        """Every non-empty row that can rest on ``below``."""
        occupied = {c for o, w in below for c in range(o, o + w)}
        lo = min(occupied) - (self.wmax - 1)
        hi = max(occupied)
        if self.left_wall:
            lo = max(lo, 0)
        footprints = set() if on_platform or not self.spec.restricted else set(below)
        contiguous = self.spec.row_convex
        widths, order = self.widths, self.order

        def place(start: int, row: Row, rem: tuple[int, ...]):
            if row:
                yield row, rem
                first = start
                last = start if contiguous else hi
            else:
                first, last = lo, hi
            for o in range(max(first, lo), last + 1):
                for i in order:
                    if not rem[i]:
                        continue
                    w = widths[i]
                    if (o, w) in footprints:
                        continue
                    if not any(c in occupied for c in range(o, o + w)):
                        continue
                    yield from place(o + w, row + ((o, w),), rem[:i] + (rem[i] - 1,) + rem[i + 1:])

        yield from place(lo, (), remaining)

    def roots(self) -> list[tuple[tuple[Row, ...], tuple[int, ...]]]:
        """Bottom rows, each with the block counts still to place."""
        spec = self.spec
        if spec.cls.platform is not None:
            if spec.n == 0:
                return [((), spec.nvec)]
            platform: Row = ((0, spec.cls.platform),)
            return [((row,), rem) for row, rem in self.rows_above(platform, spec.nvec, on_platform=True)]
        kind = spec.cls.kind
        sizes = [spec.cls.param] if kind is Kind.W else [1] if kind is Kind.U else range(1, spec.n + 1)
        out = []
        for b in sizes:
            for seq, rem in self._sequences(b, spec.nvec):
                row, o = [], 0
                for w in seq:
                    row.append((o, w))
                    o += w
                out.append(((tuple(row),), rem))
        return out

    def _sequences(self, b: int, rem: tuple[int, ...]):
        if b == 0:
            yield (), rem
            return
        for i in self.order:
            if rem[i]:
                for tail, r in self._sequences(b - 1, rem[:i] + (rem[i] - 1,) + rem[i + 1:]):
                    yield (self.widths[i],) + tail, r

    def grow(self, rows: tuple[Row, ...], remaining: tuple[int, ...]) -> Iterator[tuple[Row, ...]]:
        if not any(remaining):
            yield rows
            return
        for row, rem in self.rows_above(rows[-1], remaining):
            yield from self.grow(rows + (row,), rem)

    def count_from(self, below: Row, remaining: tuple[int, ...]) -> int:
        if not any(remaining):
            return 1
        if self.left_wall:
            key = (below, remaining)
        else:
            base = below[0][0]
            key = (tuple((o - base, w) for o, w in below), remaining)
        hit = self._memo.get(key)
        if hit is None:
            hit = sum(self.count_from(row, rem) for row, rem in self.rows_above(below, remaining))
            self._memo[key] = hit
        return hit

    def tower(self, rows: tuple[Row, ...]) -> Tower:
        blocks = [Block(r, o, w) for r, row in enumerate(rows) for o, w in row]
        return Tower(self.spec.widths, blocks, self.spec.cls.platform)


def _check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise TowerError(f"{n} blocks exceeds the enumeration cap {cap}")


def _expand(args) -> list[tuple[Row, ...]]:
    spec, rows, rem = args
    return list(_Search(spec).grow(rows, rem))


def enumerate_towers(spec: EnumSpec, cap: int | None = None, workers: int = 1) -> list[Tower]:
    """All towers of the class, each once, sorted by their block lists.

    With ``workers > 1`` the subtrees above distinct bottom rows are explored
    in separate processes; the sorted result is the same either way.
    """
    _check_cap(spec.n, cap)
    search = _Search(spec)
    roots = search.roots()
    if workers > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_expand, [(spec, rows, rem) for rows, rem in roots])
            found = [rows for part in parts for rows in part]
    else:
        found = [rows for root, rem in roots for rows in search.grow(root, rem)]
    towers = [search.tower(rows) for rows in found]
    towers.sort(key=Tower.key)
    return towers


def iter_towers(spec: EnumSpec, cap: int | None = None) -> Iterator[Tower]:
    """Towers in search order, without sorting or holding them all."""
    _check_cap(spec.n, cap)
    search = _Search(spec)
    for root, rem in search.roots():
        for rows in search.grow(root, rem):
            yield search.tower(rows)


def count(spec: EnumSpec, cap: int | None = None) -> int:
    """Number of towers in the class, by memoised search (nothing materialised)."""
    _check_cap(spec.n, cap)
    search = _Search(spec)
    if spec.n == 0:
        return 1
    return sum(search.count_from(rows[-1], rem) for rows, rem in search.roots())


def enumerate_row_convex(ell: int, n: int, k: int, cap: int | None = None) -> list[Tower]:
    """Row-convex k-omino towers of ``n`` blocks on a platform of width ``ell * k``."""
    if k < 1 or ell < 1 or n < 0:
        raise TowerError(f"bad parameters ell={ell} n={n} k={k}")
    spec = EnumSpec((k,), (n,), ClassSpec.row_convex_on_platform(ell * k))
    return enumerate_towers(spec, cap)


def count_row_convex(n: int, k: int, cap: int | None = None) -> int:
    """Free row-convex k-omino towers of ``n`` blocks."""
    return count(EnumSpec((k,), (n,), ClassSpec.any_convex_bottom(), row_convex=True), cap)


def nvecs(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All multiplicity vectors of length ``m`` summing to ``n``."""
    if m == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in nvecs(m - 1, n - first):
            yield (first,) + rest
