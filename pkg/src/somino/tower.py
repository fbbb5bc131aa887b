"""Tower geometry: blocks, towers, validation and class membership.

A tower is a set of unit-height blocks placed on integer rows and columns.
Row 0 is the bottom row.  A block occupies the half-open column interval
``[offset, offset + width)``.  Towers without a platform are stored in
canonical form (leftmost bottom block starts at column 0); towers with a
platform are anchored to it instead, the platform occupying ``[0, platform)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence


class TowerError(ValueError):
    """Raised for towers or parameters that an operation cannot accept."""


@dataclass(frozen=True)
class WidthList:
    """The allowed block widths, in a fixed order."""

    widths: tuple[int, ...]

    def __init__(self, widths: Iterable[int]):
        ws = tuple(int(w) for w in widths)
        if not ws:
            raise TowerError("width list must be non-empty")
        if any(w < 1 for w in ws):
            raise TowerError(f"widths must be positive: {ws}")
        if len(set(ws)) != len(ws):
            raise TowerError(f"widths must be pairwise distinct: {ws}")
        object.__setattr__(self, "widths", ws)

    def __iter__(self) -> Iterator[int]:
        return iter(self.widths)

    def __len__(self) -> int:
        return len(self.widths)

    def __getitem__(self, i: int) -> int:
        return self.widths[i]

    def __contains__(self, w: object) -> bool:
        return w in self.widths

    def index(self, w: int) -> int:
        return self.widths.index(w)

    @property
    def max_width(self) -> int:
        return max(self.widths)


def as_widths(widths: WidthList | Iterable[int]) -> WidthList:
    return widths if isinstance(widths, WidthList) else WidthList(widths)


@dataclass(frozen=True, order=True)
class Block:
    row: int
    offset: int
    width: int

    @property
    def end(self) -> int:
        """First column to the right of the block."""
        return self.offset + self.width

    @property
    def right(self) -> int:
        """Rightmost occupied column."""
        return self.offset + self.width - 1

    def overlaps(self, other: Block) -> bool:
        return self.offset < other.end and other.offset < self.end

    def shifted(self, d: int) -> Block:
        return Block(self.row, self.offset + d, self.width)


@dataclass(frozen=True)
class Tower:
    widths: WidthList
    blocks: tuple[Block, ...]
    platform: int | None = None

    def __init__(self, widths, blocks: Iterable[Block], platform: int | None = None):
        object.__setattr__(self, "widths", as_widths(widths))
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))
        object.__setattr__(self, "platform", platform)

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def nvec(self) -> tuple[int, ...]:
        counts = [0] * len(self.widths)
        for b in self.blocks:
            counts[self.widths.index(b.width)] += 1
        return tuple(counts)

    @property
    def height(self) -> int:
        return 1 + max((b.row for b in self.blocks), default=-1)

    def row(self, r: int) -> tuple[Block, ...]:
        return tuple(b for b in self.blocks if b.row == r)

    def rows(self) -> list[tuple[Block, ...]]:
        return [self.row(r) for r in range(self.height)]

    def shifted(self, d: int) -> Tower:
        return Tower(self.widths, (b.shifted(d) for b in self.blocks), self.platform)

    def key(self) -> tuple[tuple[int, int, int], ...]:
        """Sort key matching the order of the serialized block list."""
        return tuple((b.row, b.offset, b.width) for b in self.blocks)

    def to_dict(self) -> dict:
        d: dict = {
            "widths": list(self.widths),
            "blocks": [{"row": b.row, "offset": b.offset, "width": b.width} for b in self.blocks],
        }
        if self.platform is not None:
            d["platform"] = self.platform
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> Tower:
        try:
            blocks = [Block(int(b["row"]), int(b["offset"]), int(b["width"])) for b in d["blocks"]]
            return cls(d["widths"], blocks, d.get("platform"))
        except (KeyError, TypeError) as exc:
            raise TowerError(f"malformed tower object: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> Tower:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    """The first invariant a tower breaks, and the blocks responsible."""

    kind: str
    blocks: tuple[Block, ...] = field(default=())
    message: str = ""

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


def validate(t: Tower) -> Violation | None:
    """Return ``None`` if the tower is valid, else the first violation found.

    Checks, in order: non-empty (platform towers may be empty), widths in the
    width list, non-negative rows, no overlap within a row, support of every
    block above row 0, platform support of row 0 and the canonical anchor.
    """
    if not t.blocks and t.platform is None:
        return Violation("empty", (), "a tower needs at least one block")
    if t.platform is not None and t.platform < 1:
        return Violation("platform", (), f"platform width must be positive, got {t.platform}")
    for b in t.blocks:
        if b.width not in t.widths:
            return Violation("width", (b,), f"width {b.width} not in {list(t.widths)}")
        if b.row < 0:
            return Violation("row", (b,), f"negative row {b.row}")
    rows = t.rows()
    for row in rows:
        for a, b in zip(row, row[1:]):
            if a.end > b.offset:
                return Violation("overlap", (a, b), f"blocks overlap in row {a.row}")
    for r in range(1, len(rows)):
        for b in rows[r]:
            if not any(b.overlaps(c) for c in rows[r - 1]):
                return Violation("support", (b,), f"block at row {r} offset {b.offset} is unsupported")
    if t.platform is not None:
        for b in rows[0] if rows else ():
            if not (b.offset < t.platform and b.end > 0):
                return Violation("support", (b,), f"bottom block at offset {b.offset} misses the platform")
    elif rows[0][0].offset != 0:
        return Violation("canonical", (rows[0][0],), f"leftmost bottom block at offset {rows[0][0].offset}, expected 0")
    return None


def is_valid(t: Tower) -> bool:
    return validate(t) is None


def _require_valid(t: Tower) -> None:
    v = validate(t)
    if v is not None:
        raise TowerError(f"invalid tower ({v})")


def canonicalize(t: Tower) -> Tower:
    """Translate horizontally so the leftmost bottom block starts at column 0.

    Platform towers are anchored to their platform and returned unchanged.
    """
    if t.platform is not None:
        return t
    if not t.blocks:
        raise TowerError("cannot canonicalize an empty tower")
    low = min(b.row for b in t.blocks)
    if low != 0:
        t = Tower(t.widths, (Block(b.row - low, b.offset, b.width) for b in t.blocks))
    d = -min(b.offset for b in t.blocks if b.row == 0)
    return t.shifted(d) if d else t


class Kind(Enum):
    W = "W"
    U = "U"
    V = "V"
    H = "H"
    ANY = "any"
    ROW_CONVEX = "RC"


@dataclass(frozen=True)
class ClassSpec:
    """A tower class.  ``param`` is b for W, the platform width for V, H, RC."""

    kind: Kind
    param: int | None = None

    def __post_init__(self):
        needs = self.kind in (Kind.W, Kind.V, Kind.H, Kind.ROW_CONVEX)
        if needs and (self.param is None or self.param < 1):
            raise TowerError(f"class {self.kind.value} needs a parameter >= 1")
        if not needs and self.param is not None:
            raise TowerError(f"class {self.kind.value} takes no parameter")

    @classmethod
    def Wb(cls, b: int) -> ClassSpec:
        return cls(Kind.W, b)

    @classmethod
    def U(cls) -> ClassSpec:
        return cls(Kind.U)

    @classmethod
    def Vl(cls, ell: int) -> ClassSpec:
        return cls(Kind.V, ell)

    @classmethod
    def Hl(cls, ell: int) -> ClassSpec:
        return cls(Kind.H, ell)

    @classmethod
    def any_convex_bottom(cls) -> ClassSpec:
        return cls(Kind.ANY)

    @classmethod
    def row_convex_on_platform(cls, ell: int) -> ClassSpec:
        return cls(Kind.ROW_CONVEX, ell)

    @property
    def platform(self) -> int | None:
        return self.param if self.kind in (Kind.V, Kind.H, Kind.ROW_CONVEX) else None

    @property
    def left_wall(self) -> bool:
        """Whether the class forbids blocks left of column 0."""
        return self.kind in (Kind.U, Kind.H)

    @classmethod
    def parse(cls, text: str) -> ClassSpec:
        """Parse ``W2``, ``U``, ``V1``, ``H3``, ``any`` or ``RC4``."""
        s = text.strip()
        if s in ("U", "any"):
            return cls(Kind(s))
        for prefix in ("RC", "W", "V", "H"):
            if s.startswith(prefix) and s[len(prefix):].isdigit():
                return cls(Kind(prefix), int(s[len(prefix):]))
        raise TowerError(f"unknown tower class {text!r}")

    def __str__(self) -> str:
        return self.kind.value + ("" if self.param is None else str(self.param))


def _row_is_convex(row: Sequence[Block]) -> bool:
    return all(a.end == b.offset for a, b in zip(row, row[1:]))


def is_member(t: Tower, c: ClassSpec) -> bool:
    _require_valid(t)
    if t.platform != c.platform:
        return False
    if c.left_wall and any(b.offset < 0 for b in t.blocks):
        return False
    bottom = t.row(0)
    if c.kind in (Kind.W, Kind.U, Kind.ANY):
        if not _row_is_convex(bottom):
            return False
        if c.kind is Kind.W:
            return len(bottom) == c.param
        if c.kind is Kind.U:
            return len(bottom) == 1
        return True
    if c.kind is Kind.ROW_CONVEX:
        return is_row_convex(t)
    # V and H: platform support is already part of validity
    return True


def is_restricted(t: Tower) -> bool:
    """True iff no block sits directly on a block with the same footprint."""
    _require_valid(t)
    below = {(b.row + 1, b.offset, b.width) for b in t.blocks}
    return not any((b.row, b.offset, b.width) in below for b in t.blocks)


def is_row_convex(t: Tower) -> bool:
    _require_valid(t)
    return all(_row_is_convex(row) for row in t.rows())


def drop(widths, placed: Iterable[tuple[int, int]], platform: int | None = None) -> Tower:
    """Build a tower by dropping blocks ``(offset, width)`` one after another.

    Each block falls until it lands on an earlier block it shares a column
    with, or reaches row 0.
    """
    blocks: list[Block] = []
    for offset, width in placed:
        probe = Block(0, offset, width)
        row = 1 + max((b.row for b in blocks if b.overlaps(probe)), default=-1)
        blocks.append(Block(row, offset, width))
    return Tower(widths, blocks, platform)


def collapse(t: Tower) -> Tower:
    """Remove every block resting directly on an identical block, then drop.

    This undoes the replacement of blocks by vertical stacks of copies.
    """
    _require_valid(t)
    below = {(b.row + 1, b.offset, b.width) for b in t.blocks}
    kept = [b for b in t.blocks if (b.row, b.offset, b.width) not in below]
    return drop(t.widths, ((b.offset, b.width) for b in kept), t.platform)
