"""Text, SVG and DOT renderings of arrangements and isotopy graphs.

Crossings are laid out left to right at uniform spacing in word order,
which preserves the order of every pair of crossings.  In text output
E-crossings print as X, F-crossings as x, and bullets as *.
"""

from __future__ import annotations

from .schemes import E, F, H, build_arrangement

_CELL = 4


def render_ascii(scheme):
    """Plain-text picture: n wire rows, strip rows for crossings."""
    n, l = scheme.n, scheme.length
    wire_rows = {j: ["-" * _CELL for _ in range(l)] for j in range(1, n + 1)}
    strip_rows = {j: [" " * _CELL for _ in range(l)] for j in range(1, n)}
    for p, sym in enumerate(scheme.word):
        if sym.kind == H:
            wire_rows[sym.index][p] = "-*-".center(_CELL, "-")
        else:
            mark = "X" if sym.kind == E else "x"
            strip_rows[sym.index][p] = mark.center(_CELL)
    lines = []
    for j in range(n, 0, -1):
        lines.append(f"{j} " + "".join(wire_rows[j]))
        if j > 1:
            lines.append("  " + "".join(strip_rows[j - 1]))
    lines.append("  " + "".join(s.token.ljust(_CELL) for s in scheme.word))
    return "\n".join(lines)


def render_svg(scheme):
    """SVG picture with both pseudoline families and the bullets."""
    arr = build_arrangement(scheme)
    n, l = scheme.n, scheme.length
    dx, dy, margin = 36, 32, 40
    width = 2 * margin + l * dx
    height = 2 * margin + (n - 1) * dy

    def xpos(p):
        return margin + p * dx

    def ypos(h):
        return margin + (n - h) * dy

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>'
    ]
    for label in range(1, n + 1):
        for kind, states, style in (
                (E, arr.e_states, 'stroke="#1a1a1a" stroke-width="2.4"'),
                (F, arr.f_states, 'stroke="#999999" stroke-width="1.2"')):
            points = []
            for p in range(l + 1):
                h = states[p].index(label) + 1
                points.append(f"{xpos(p)},{ypos(h)}")
            parts.append(f'<polyline fill="none" {style} '
                         f'points="{" ".join(points)}"/>')
        eh = arr.e_states[0].index(label) + 1
        fh = arr.f_states[l].index(label) + 1
        parts.append(f'<text x="{margin - 18}" y="{ypos(eh) + 4}" '
                     f'font-size="13">{label}</text>')
        parts.append(f'<text x="{width - margin + 8}" y="{ypos(fh) + 4}" '
                     f'font-size="13" fill="#777">{label}</text>')
    for p, sym in enumerate(scheme.word, start=1):
        if sym.kind == H:
            cx = (xpos(p - 1) + xpos(p)) / 2
            parts.append(f'<circle cx="{cx}" cy="{ypos(sym.index)}" r="4.5"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def _format_sets(pair, n):
    rows, cols = pair
    if n <= 9:
        return "".join(map(str, rows)) + "|" + "".join(map(str, cols))
    return ",".join(map(str, rows)) + "|" + ",".join(map(str, cols))


def isotopy_dot(graph, names=None):
    """DOT output of an isotopy graph; node labels list the families."""
    lines = ["graph isotopy {", "  node [shape=box, fontsize=10];"]
    n = graph.nodes[0].scheme.n if graph.nodes else 0
    for k, node in enumerate(graph.nodes):
        if names:
            label = names[k]
        else:
            label = "\\n".join(_format_sets(pair, n) for pair in node.family)
        lines.append(f'  n{k} [label="{label}"];')
    for i, j in sorted(graph.edges):
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines)
