"""SVG output: labelled braid diagrams and separatrix charts of derivations.

Both producers are pure and byte-deterministic: coordinates are printed
with at most two decimals and elements are emitted in a fixed order.
"""

from __future__ import annotations

import dataclasses
import xml.etree.ElementTree as ET

from .derivation import positive_words
from .naming import NameEntry, name_sequence, signed_name_sequence
from .words import BraidWord, Derivation, format_word

SVG_NS = "http://www.w3.org/2000/svg"

# one colour per strand name, cycled
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
)
SEPARATRIX_COLOUR = "#cc0000"

MARGIN = 12.0
LABEL_BAND = 40.0


@dataclasses.dataclass(frozen=True)
class RenderOptions:
    cell_width: float = 24.0
    cell_height: float = 16.0
    show_labels: bool = False
    highlight_pairs: tuple[tuple[NameEntry, NameEntry], ...] = ()

    def __post_init__(self):
        if self.cell_width <= 0 or self.cell_height <= 0:
            raise ValueError("cell dimensions must be positive")


def fmt(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _root(width: float, height: float) -> ET.Element:
    return ET.Element("svg", {
        "xmlns": SVG_NS,
        "version": "1.1",
        "width": fmt(width),
        "height": fmt(height),
        "viewBox": f"0 0 {fmt(width)} {fmt(height)}",
    })


def _serialize(root: ET.Element) -> str:
    ET.indent(root)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def _line(parent, x1, y1, x2, y2, **attrs) -> ET.Element:
    a = {"x1": fmt(x1), "y1": fmt(y1), "x2": fmt(x2), "y2": fmt(y2)}
    a.update({k.replace("_", "-"): v for k, v in attrs.items()})
    return ET.SubElement(parent, "line", a)


def _text(parent, x, y, s, size, anchor="middle", rotate=None) -> ET.Element:
    a = {"x": fmt(x), "y": fmt(y), "font-size": fmt(size), "text-anchor": anchor,
         "font-family": "sans-serif"}
    if rotate is not None:
        a["transform"] = f"rotate({fmt(rotate)} {fmt(x)} {fmt(y)})"
    el = ET.SubElement(parent, "text", a)
    el.text = s
    return el


def render_braid_diagram(w: BraidWord, opts: RenderOptions = RenderOptions()) -> str:
    """One column per letter; strand position 1 is the bottom track.

    For a positive letter s_i the strand coming from position i + 1 passes
    over; for s_i^-1 the one from position i does. The under strand is drawn
    with a gap around the crossing point.
    """
    cw, ch = opts.cell_width, opts.cell_height
    top = MARGIN + (LABEL_BAND if opts.show_labels and len(w) else 0.0)
    left = MARGIN + 10.0
    width = left + cw * max(len(w), 1) + MARGIN
    height = top + ch * (w.n - 1) + MARGIN
    root = _root(width, height)

    def y_of(position: int) -> float:
        return top + (w.n - position) * ch

    tracks = ET.SubElement(root, "g", {"class": "tracks", "stroke-width": "2",
                                       "stroke-linecap": "round", "fill": "none"})
    for k in range(1, w.n + 1):
        _text(root, MARGIN, y_of(k) + 3, str(k), 8, anchor="end")

    state = list(range(1, w.n + 1))
    if not w.letters:
        for k in range(1, w.n + 1):
            _line(tracks, left, y_of(k), left + cw, y_of(k), stroke=PALETTE[(k - 1) % len(PALETTE)])
    for t, x in enumerate(w.letters):
        x0, x1 = left + t * cw, left + (t + 1) * cw
        i = abs(x)
        col = ET.SubElement(tracks, "g", {"class": "column", "data-letter": str(x)})
        for k in range(1, w.n + 1):
            if k not in (i, i + 1):
                _line(col, x0, y_of(k), x1, y_of(k), stroke=PALETTE[(state[k - 1] - 1) % len(PALETTE)])
        # (start position, end position) of the two crossing strands
        over, under = ((i + 1, i), (i, i + 1)) if x > 0 else ((i, i + 1), (i + 1, i))
        ua, ub = under
        ucol = PALETTE[(state[ua - 1] - 1) % len(PALETTE)]
        ya, yb = y_of(ua), y_of(ub)
        for f0, f1 in ((0.0, 0.38), (0.62, 1.0)):
            _line(col, x0 + f0 * cw, ya + f0 * (yb - ya), x0 + f1 * cw, ya + f1 * (yb - ya),
                  stroke=ucol)
        oa, ob = over
        _line(col, x0, y_of(oa), x1, y_of(ob), stroke=PALETTE[(state[oa - 1] - 1) % len(PALETTE)])
        state[i - 1], state[i] = state[i], state[i - 1]

    if opts.show_labels and w.letters:
        labels = ET.SubElement(root, "g", {"class": "names"})
        for t, e in enumerate(signed_name_sequence(w)):
            cx = left + (t + 0.5) * cw
            _text(labels, cx, top - 6, str(e), 7, anchor="start", rotate=-60)
    return _serialize(root)


def chart_points(d: Derivation, opts: RenderOptions = RenderOptions()) -> dict[NameEntry, list[tuple[float, float]]]:
    """Separatrix vertices: for each name, its (x, y) in every row."""
    rows = [name_sequence(w).entries for w in positive_words(d)]
    top = MARGIN + (LABEL_BAND / 2 if opts.show_labels else 0.0)
    left = MARGIN
    points: dict[NameEntry, list[tuple[float, float]]] = {e: [] for e in rows[0]}
    for t, row in enumerate(rows):
        y = top + t * opts.cell_height
        for j, e in enumerate(row):
            points[e].append((left + (j + 0.5) * opts.cell_width, y))
    return points


def _crossing(a0, a1, b0, b1) -> tuple[float, float]:
    # a and b are segments between the same two rows
    da = a1[0] - a0[0]
    db = b1[0] - b0[0]
    s = (b0[0] - a0[0]) / (da - db)
    return a0[0] + s * da, a0[1] + s * (a1[1] - a0[1])


def render_derivation_chart(d: Derivation, opts: RenderOptions = RenderOptions()) -> str:
    """Rows of name sequences joined by one polyline per name.

    Segments between consecutive rows are straight, so two polylines cross
    in an interval exactly when the move swaps their order. Crossings of the
    highlighted pairs are marked with a circle.
    """
    words = positive_words(d)
    points = chart_points(d, opts)
    cw, ch = opts.cell_width, opts.cell_height
    L = len(words[0])
    top = MARGIN + (LABEL_BAND / 2 if opts.show_labels else 0.0)
    text_x = MARGIN + cw * max(L, 1) + 8
    longest = max((len(format_word(w)) for w in words), default=0)
    width = text_x + 5.0 * longest + MARGIN
    height = top + ch * len(d) + MARGIN
    root = _root(width, height)

    rows = ET.SubElement(root, "g", {"class": "rows", "font-family": "sans-serif"})
    for t, w in enumerate(words):
        y = top + t * ch
        _line(rows, MARGIN, y, MARGIN + cw * max(L, 1), y, stroke="#dddddd", stroke_width="1")
        _text(rows, text_x, y + 3, format_word(w), 8, anchor="start")

    seps = ET.SubElement(root, "g", {"class": "separatrices", "fill": "none",
                                     "stroke": SEPARATRIX_COLOUR, "stroke-width": "1",
                                     "stroke-dasharray": "2 2"})
    for e in name_sequence(words[0]).entries:
        pts = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points[e])
        ET.SubElement(seps, "polyline", {"data-name": str(e), "points": pts})

    if opts.highlight_pairs:
        marks = ET.SubElement(root, "g", {"class": "flips", "fill": "none",
                                          "stroke": "#000000", "stroke-width": "1.5"})
        for x, y in opts.highlight_pairs:
            if x not in points or y not in points:
                continue
            px, py = points[x], points[y]
            for t in range(len(d)):
                before = px[t][0] < py[t][0]
                after = px[t + 1][0] < py[t + 1][0]
                if before != after:
                    cx, cy = _crossing(px[t], px[t + 1], py[t], py[t + 1])
                    ET.SubElement(marks, "circle", {
                        "cx": fmt(cx), "cy": fmt(cy), "r": "3",
                        "data-pair": f"{x} {y}", "data-step": str(t + 1),
                    })

    if opts.show_labels:
        labels = ET.SubElement(root, "g", {"class": "names"})
        for e, pts in points.items():
            for x, y in pts:
                _text(labels, x, y - 2, str(e), 4)
    return _serialize(root)
