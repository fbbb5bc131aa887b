"""SVG drawings of towers: one rectangle per block, row 0 at the bottom."""
from __future__ import annotations

from .tower import Tower

UNIT = 10
MARGIN = 5
PLATFORM_HEIGHT = 2
PALETTE = ["#80d4f0", "#c9a0dc", "#f5b8c8", "#b5dfa0", "#f7d08a", "#a0b8f0", "#e0e0a0", "#d0a080"]
PLATFORM_FILL = "#c8a27a"


def tower_svg(t: Tower) -> str:
    cols = [b.offset for b in t.blocks] + [b.end for b in t.blocks]
    if t.platform is not None:
        cols += [0, t.platform]
    left, right = min(cols), max(cols)
    base = t.height * UNIT + MARGIN  # y of the top edge of row -1
    extra = PLATFORM_HEIGHT if t.platform is not None else 0
    width = (right - left) * UNIT + 2 * MARGIN
    height = t.height * UNIT + 2 * MARGIN + extra

    def x(col: int) -> int:
        return (col - left) * UNIT + MARGIN

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    if t.platform is not None:
        parts.append(
            f'<rect class="platform" x="{x(0)}" y="{base}" width="{t.platform * UNIT}" '
            f'height="{PLATFORM_HEIGHT}" fill="{PLATFORM_FILL}" stroke="black" stroke-width="0.5"/>'
        )
    for b in t.blocks:
        fill = PALETTE[t.widths.index(b.width) % len(PALETTE)]
        y = base - (b.row + 1) * UNIT
        parts.append(
            f'<rect class="block" x="{x(b.offset)}" y="{y}" width="{b.width * UNIT}" height="{UNIT}" '
            f'fill="{fill}" stroke="black" stroke-width="0.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
