"""Deterministic ASCII and SVG pictures of diagrams.

Upper points sit on the top row, lower points on the bottom row; white legs
print as 'o', black legs as '*'.  Every block gets its own horizontal rail
between the rows, with vertical stubs from its points, so arbitrary set
partitions (not only pairings) draw sensibly.
"""

from __future__ import annotations

from .diagrams import PartitionDiagram

_SYM = {"w": "o", "b": "*"}
_COL_STEP = 4


def _column(point: int, k: int) -> int:
    return _COL_STEP * (point if point < k else point - k)


def ascii_render(d: PartitionDiagram) -> str:
    k, l = len(d.upper), len(d.lower)
    n_cols = _COL_STEP * max(k, l, 1) - _COL_STEP + 1
    n_rails = max(len(d.blocks), 1)
    height = n_rails + 2
    grid = [[" "] * n_cols for _ in range(height)]
    for rail, blk in enumerate(d.blocks):
        r = rail + 1
        cols = [_column(p, k) for p in blk]
        lo, hi = min(cols), max(cols)
        for x in range(lo, hi + 1):
            grid[r][x] = "-"
        for p in blk:
            x = _column(p, k)
            rows = range(1, r + 1) if p < k else range(r, height - 1)
            for y in rows:
                grid[y][x] = "+" if grid[y][x] in "-+" else "|"
            grid[r][x] = "+"
    for i, c in enumerate(d.upper):
        grid[0][_COL_STEP * i] = _SYM[c]
    for j, c in enumerate(d.lower):
        grid[height - 1][_COL_STEP * j] = _SYM[c]
    return "\n".join("".join(row).rstrip() for row in grid)


def svg_render(d: PartitionDiagram) -> str:
    k, l = len(d.upper), len(d.lower)
    step, pad, radius = 40, 20, 6
    n_rails = max(len(d.blocks), 1)
    width = pad * 2 + step * (max(k, l, 1) - 1)
    height = pad * 2 + 30 * (n_rails + 1)
    top_y, bot_y = pad, height - pad

    def x_of(p: int) -> int:
        return pad + step * (p if p < k else p - k)

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">']
    for rail, blk in enumerate(d.blocks):
        y = top_y + 30 * (rail + 1)
        xs = [x_of(p) for p in blk]
        parts.append(f'<line x1="{min(xs)}" y1="{y}" x2="{max(xs)}" y2="{y}" '
                     'stroke="black"/>')
        for p in blk:
            x = x_of(p)
            y0, y1 = (top_y, y) if p < k else (y, bot_y)
            parts.append(f'<line x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" '
                         'stroke="black"/>')
    for i, c in enumerate(d.upper):
        fill = "white" if c == "w" else "black"
        parts.append(f'<circle cx="{pad + step * i}" cy="{top_y}" '
                     f'r="{radius}" fill="{fill}" stroke="black"/>')
    for j, c in enumerate(d.lower):
        fill = "white" if c == "w" else "black"
        parts.append(f'<circle cx="{pad + step * j}" cy="{bot_y}" '
                     f'r="{radius}" fill="{fill}" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
