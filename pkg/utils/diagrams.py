"""
Braid Diagrams
Static pictures of closed-braid words: deterministic SVG through matplotlib and a plain-text grid
"""

import io
import logging

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.lines import Line2D  # noqa: E402

logger = logging.getLogger(__name__)

# Fixed element ids so repeated renders are byte-identical
matplotlib.rcParams['svg.hashsalt'] = 'template-knots'
matplotlib.rcParams['svg.fonttype'] = 'none'

STRAND_COLOR = '#1f3b73'
GAP = 0.18          # fraction of a crossing level left open around the under-strand
LEVEL_HEIGHT = 1.0


def _segments(braid):
    """
    Yield (kind, crossing index, xs, ys) for every piece of the picture. Strand
    positions are x = 0..l-1 and crossing k spans y = -k .. -(k+1).
    """
    l = braid.strands
    if not braid.gens:
        for j in range(l):
            yield 'strand', None, [j, j], [0, -LEVEL_HEIGHT]
        return
    for k, g in enumerate(braid.gens):
        top, bottom = -k * LEVEL_HEIGHT, -(k + 1) * LEVEL_HEIGHT
        left = abs(g) - 1
        for j in range(l):
            if j not in (left, left + 1):
                yield 'strand', None, [j, j], [top, bottom]
        # positive: the strand moving right passes over
        over = ([left, left + 1], [top, bottom]) if g > 0 else ([left + 1, left], [top, bottom])
        under_start, under_end = ((left + 1, top), (left, bottom)) if g > 0 else ((left, top), (left + 1, bottom))
        yield 'over', k, over[0], over[1]
        mid_x = (under_start[0] + under_end[0]) / 2
        mid_y = (under_start[1] + under_end[1]) / 2
        for end in (under_start, under_end):
            fx = mid_x + (end[0] - mid_x) * GAP * 2
            fy = mid_y + (end[1] - mid_y) * GAP * 2
            yield 'under', k, [end[0], fx], [end[1], fy]


def render_svg(braid, title=None):
    """SVG text of the braid; every over-strand carries the id crossing-k"""
    height = max(len(braid.gens), 1) * LEVEL_HEIGHT
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * braid.strands, 1.0 + 0.35 * height))
    try:
        for kind, k, xs, ys in _segments(braid):
            line = Line2D(xs, ys, color=STRAND_COLOR, linewidth=2.0, solid_capstyle='round')
            if kind == 'over':
                line.set_gid(f"crossing-{k}")
            ax.add_line(line)
        ax.set_xlim(-0.5, braid.strands - 0.5)
        ax.set_ylim(-height - 0.25, 0.25)
        ax.set_axis_off()
        if title:
            ax.set_title(title, fontsize=9)
        buffer = io.StringIO()
        fig.savefig(buffer, format='svg', metadata={'Date': None, 'Creator': None})
        return buffer.getvalue()
    finally:
        plt.close(fig)


def render_text(braid):
    """
    Text grid, one row per crossing:

        1 2
        | |
         X   s1+
        | |
    """
    l = braid.strands
    width = 2 * l - 1
    plain = ' '.join('|' * l)
    lines = [' '.join(str((j + 1) % 10) for j in range(l)), plain]
    for g in braid.gens:
        row = list(plain)
        column = 2 * (abs(g) - 1)
        row[column] = ' '
        row[column + 1] = 'X'
        row[column + 2] = ' '
        sign = '+' if g > 0 else '-'
        lines.append(''.join(row).ljust(width) + f"   s{abs(g)}{sign}")
        lines.append(plain)
    return '\n'.join(lines) + '\n'


def crossing_ids(svg):
    """Number of crossing groups in an SVG produced by render_svg"""
    return svg.count('id="crossing-')


def emit_diagram(braid, path, fmt='svg', title=None):
    """Write the braid picture to path and return its text"""
    if fmt == 'svg':
        text = render_svg(braid, title)
    elif fmt == 'text':
        text = render_text(braid)
    else:
        raise ValueError(f"unknown diagram format '{fmt}'")
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text)
    logger.info("Wrote %s diagram with %d crossings to %s", fmt, len(braid.gens), path)
    return text
