# gridctl
# Released under the LGPLv3 License

import math
from xml.sax.saxutils import escape

from ..core import *
from ..grid import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ symbol assignment ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def simpleSymbolMap(g):
    '''one symbol per (axis, odd prime power q of that axis): every node whose coordinate on
    the axis lies in the canonical set for q carries it'''
    symbols = {node: [] for node in g.nodes()}
    legend = []
    for axis, n in enumerate(g.dims, start=1):
        for q in oddPrimePowerDivisors(n):
            name = 'a%dq%d' % (axis, q)
            coords = set(canonicalUncontrollableSet(n, q))
            legend.append(Bucket(symbol=name, kind='simple', axis=axis, modulus=q, coordinates=sorted(coords)))
            for node in symbols:
                if node[axis - 1] in coords:
                    symbols[node].append(name)
    return Bucket(symbols=symbols, legend=legend)

def partitionSymbols(g):
    data = simpleSymbolMap(g)
    if not isSimple(g):
        repeated = nonsimpleSymbolMap(g)
        for node, names in repeated.symbols.items():
            data.symbols[node].extend(names)
        data.legend.extend(repeated.legend)
    return data

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ svg ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

_glyphs = ['cross', 'triangle', 'pentagon', 'circle', 'square', 'diamond']
_colors = ['#c0392b', '#2471a3', '#1e8449', '#7d3c98', '#b9770e', '#117a65', '#5d6d7e']

def _glyphSvg(kind, cx, cy, r, color):
    if kind == 'cross':
        return ('<path d="M%.1f %.1f L%.1f %.1f M%.1f %.1f L%.1f %.1f" stroke="%s" stroke-width="2"/>' %
            (cx - r, cy - r, cx + r, cy + r, cx - r, cy + r, cx + r, cy - r, color))
    if kind == 'circle':
        return '<circle cx="%.1f" cy="%.1f" r="%.1f" fill="none" stroke="%s" stroke-width="2"/>' % (cx, cy, r, color)
    if kind == 'square':
        return ('<rect x="%.1f" y="%.1f" width="%.1f" height="%.1f" fill="none" stroke="%s" stroke-width="2"/>' %
            (cx - r, cy - r, 2 * r, 2 * r, color))
    sides = {'triangle': 3, 'pentagon': 5, 'diamond': 4}[kind]
    points = []
    for i in range(sides):
        angle = -math.pi / 2 + 2 * math.pi * i / sides
        points.append('%.1f,%.1f' % (cx + r * math.cos(angle), cy + r * math.sin(angle)))
    return '<polygon points="%s" fill="none" stroke="%s" stroke-width="2"/>' % (' '.join(points), color)

def _planar(g):
    "(rows, cols, node -> (row, col)); axis 1 runs down the page"
    check(g.d <= 2, GridCtlError, 'svg output draws 1-D and 2-D grids only, got', g)
    if g.d == 1:
        return g.dims[0], 1, lambda node: (node[0], 1)
    return g.dims[0], g.dims[1], lambda node: (node[0], node[1])

def renderSvg(g, data, cell=32):
    rows, cols, place = _planar(g)
    style = {}
    for i, item in enumerate(data.legend):
        style[item.symbol] = (_glyphs[i % len(_glyphs)], _colors[i % len(_colors)])

    margin = cell
    legendHeight = (len(data.legend) + 1) * 20
    width = margin * 2 + cols * cell
    height = margin * 2 + rows * cell + legendHeight
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" viewBox="0 0 %d %d">' %
        (width, height, width, height)]
    out.append('<title>%s</title>' % escape('partition symbols for grid %s' % g))
    for node in g.nodes():
        r, c = place(node)
        cx = margin + (c - 0.5) * cell
        cy = margin + (r - 0.5) * cell
        out.append('<circle cx="%.1f" cy="%.1f" r="2" fill="#555"/>' % (cx, cy))
        names = data.symbols.get(node, [])
        for depth, name in enumerate(names):
            glyph, color = style[name]
            out.append(_glyphSvg(glyph, cx, cy, cell * 0.38 - depth * 3, color))

    y = margin + rows * cell + 20
    for item in data.legend:
        glyph, color = style[item.symbol]
        out.append(_glyphSvg(glyph, margin + 6, y - 5, 6, color))
        out.append('<text x="%d" y="%d" font-size="12" font-family="sans-serif">%s</text>' %
            (margin + 20, y, escape(describeLegendItem(item))))
        y += 20
    out.append('</svg>')
    return '\n'.join(out)

def describeLegendItem(item):
    if item.kind == 'simple':
        return '%s: axis %d, modulus %d, coordinates %s' % (item.symbol, item.axis, item.modulus,
            ','.join(str(c) for c in item.coordinates))
    return '%s: repeated eigenvalue %s from brick %s' % (item.symbol, item.value.decimal(10), item.brick)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ dot and text ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def renderDot(g, data):
    out = ['graph "grid %s" {' % g, '  node [shape=box, fontsize=10];']
    for node in g.nodes():
        flat = flattenIndex(g, node)
        label = '[%s]' % ','.join(str(c) for c in node)
        names = data.symbols.get(node, [])
        if names:
            label += '\\n' + ' '.join(names)
        out.append('  n%d [label="%s"];' % (flat, label))
    for a, b in gridEdges(g):
        out.append('  n%d -- n%d;' % (a, b))
    out.append('}')
    return '\n'.join(out)

def renderText(g, data):
    lines = ['partition symbols for grid %s' % g]
    for item in data.legend:
        lines.append('  ' + describeLegendItem(item))
    for node in g.nodes():
        names = data.symbols.get(node, [])
        if names:
            lines.append('[%s] %s' % (','.join(str(c) for c in node), ' '.join(names)))
    return '\n'.join(lines)
