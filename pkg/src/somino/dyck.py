"""Bijection between the towers of U and generalised Dyck paths.

A path is a word over the up-letters ``l`` (a step up by ``l``) and the
down-letter ``0`` (a step down by one).  A block of width ``s`` becomes the
up-letter ``s - 1``.  Turning the tower on its side, a block's column interval
becomes a vertical interval; the path sits at level ``offset`` before the
block's up-step and at level ``offset + s - 1`` (its rightmost column) after.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact import HnSpec
from .tower import Block, ClassSpec, Tower, TowerError, drop, is_member


class PathError(ValueError):
    """Raised for words that are not valid paths of their specification."""


@dataclass(frozen=True)
class DyckPath:
    spec: HnSpec
    word: tuple[int, ...]

    def __init__(self, spec: HnSpec, word: Sequence[int]):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "word", tuple(int(c) for c in word))

    def levels(self) -> list[int]:
        """Heights after each letter."""
        out, h = [], 0
        for c in self.word:
            h += c if c else -1
            out.append(h)
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self.word))


def validate_path(p: DyckPath) -> bool:
    spec = p.spec
    if len(p.word) != spec.length:
        return False
    want = Counter({l: t for t, l in spec.pairs})
    want[0] = spec.n
    if Counter(p.word) != want:
        return False
    levels = p.levels()
    return all(h >= 0 for h in levels) and (not levels or levels[-1] == 0)


def enumerate_paths(spec: HnSpec) -> Iterator[DyckPath]:
    """All valid paths of ``spec``, in lexicographic order of their words."""
    letters = sorted([0] + [l for _, l in spec.pairs])
    left = {l: t for t, l in spec.pairs}
    left[0] = spec.n
    word: list[int] = []

    def rec(h: int):
        if len(word) == spec.length:
            if h == 0:
                yield DyckPath(spec, word)
            return
        for c in letters:
            if not left[c] or (c == 0 and h == 0):
                continue
            # never climb higher than the remaining down-steps can undo
            nh = h + c if c else h - 1
            if nh > left[0] - (c == 0):
                continue
            left[c] -= 1
            word.append(c)
            yield from rec(nh)
            word.pop()
            left[c] += 1

    yield from rec(0)


def _check_u(t: Tower) -> None:
    if any(w < 2 for w in t.widths):
        raise TowerError("the bijection needs all widths >= 2")
    if not is_member(t, ClassSpec.U()):
        raise TowerError("tower is not in U")


def order_blocks(t: Tower) -> list[Block]:
    """The unique block order that drops into ``t`` and keeps each next
    block's left edge strictly left of the previous block's right edge.

    Greedy: among the blocks whose lower neighbours are all placed, take the
    rightmost one that starts no further right than the last block's
    rightmost column.
    """
    _check_u(t)
    blocks = list(t.blocks)
    below = {b: {c for c in blocks if c.row < b.row and c.overlaps(b)} for b in blocks}
    placed: list[Block] = []
    done: set[Block] = set()
    while len(placed) < len(blocks):
        ready = [b for b in blocks if b not in done and below[b] <= done]
        if placed:
            ready = [b for b in ready if b.offset <= placed[-1].right]
        if not ready:
            raise TowerError("no valid block ordering exists")
        nxt = max(ready, key=lambda b: (b.offset, -b.row))
        placed.append(nxt)
        done.add(nxt)
    return placed


def is_valid_order(t: Tower, order: Sequence[Block]) -> bool:
    """Check both ordering conditions directly."""
    if sorted(order) != list(t.blocks):
        return False
    pos = {b: i for i, b in enumerate(order)}
    for a in order:
        for b in order:
            if a.overlaps(b) and a.row < b.row and pos[a] > pos[b]:
                return False
    return all(nxt.offset <= cur.right for cur, nxt in zip(order, order[1:]))


def tower_to_path(t: Tower) -> DyckPath:
    order = order_blocks(t)
    spec = HnSpec.from_towers(t.widths, t.nvec)
    word: list[int] = []
    for cur, nxt in zip(order, order[1:] + [None]):
        word.append(cur.width - 1)
        drop_to = nxt.offset if nxt is not None else 0
        word.extend([0] * (cur.right - drop_to))
    return DyckPath(spec, word)


def path_to_tower(p: DyckPath, widths: Sequence[int] | None = None) -> Tower:
    """Rebuild the tower of U encoded by ``p``.

    ``widths`` fixes the width list (and so the order of block counts); it
    defaults to the widths ``l + 1`` of the path's up-letters, ascending.
    """
    if not validate_path(p):
        raise PathError(f"not a valid path for {p.spec.pairs}: {p}")
    if widths is None:
        widths = sorted(l + 1 for _, l in p.spec.pairs)
    placed: list[tuple[int, int]] = []
    level = 0
    for c in p.word:
        if c:
            placed.append((level, c + 1))
            level += c
        else:
            level -= 1
    t = drop(widths, placed)
    try:
        _check_u(t)
    except TowerError as exc:
        raise PathError(f"path {p} does not decode to a tower of U: {exc}") from exc
    return t
