"""Text, CSV, JSON, and SVG serialization of tensors and grid decompositions.

Only the text formats are bit-exact contracts; SVG is presentational but
keeps fixed colors so diffs stay meaningful.
"""
import csv
import io
import json
from enum import Enum

import numpy as np

from .blocks import AXES, GridDecomposition
from .compositions import format_composition, parse_composition
from .errors import DomainError, ParseError
from .zippering import Tensor, zipper

ZERO_FILL = "#CCCCCC"
GRAY_STROKE = "#666666"
BLACK_STROKE = "#000000"


class BorderClass(str, Enum):
    THIN = "thin-gray"
    DARK = "thick-dark-gray"
    BLACK = "thick-black"


def _digit_rows(t: Tensor) -> list[str]:
    return ["".join("1" if v else "0" for v in row) for row in t.entries]


def to_text(t: Tensor, style: str = "digits") -> str:
    """Render a tensor as digits, bullet glyphs, or labeled zipper words."""
    if style == "digits":
        return "\n".join(_digit_rows(t))
    if style == "bullets":
        table = str.maketrans("01", "∘•")  # ∘ / •
        return "\n".join(row.translate(table) for row in _digit_rows(t))
    if style == "annotated":
        return _annotated(t)
    raise DomainError(f"unknown text style {style!r}")


def _annotated(t: Tensor) -> str:
    width = 2 * t.k + 1
    labels = [format_composition(a) for a in t.rows]
    label_w = max(len(s) for s in labels)
    header = " " * (label_w + 1) + " ".join(
        ("|" + format_composition(b)).rjust(width) for b in t.cols)
    lines = [header]
    for a, label, row in zip(t.rows, labels, t.entries):
        cells = [zipper(a, b) if v else "-" * width
                 for b, v in zip(t.cols, row)]
        lines.append(label.rjust(label_w) + "|" + " ".join(cells))
    return "\n".join(lines)


def parse_digits(text: str) -> np.ndarray:
    """Inverse of the digits style (entries only, headers not recoverable)."""
    lines = text.splitlines()
    while lines and not lines[-1]:
        lines.pop()
    if not lines:
        raise ParseError("empty digit matrix")
    width = len(lines[0])
    rows = []
    for r, line in enumerate(lines, start=1):
        if len(line) != width:
            raise ParseError(f"row {r}: expected {width} digits, got {len(line)}")
        for c, ch in enumerate(line, start=1):
            if ch not in "01":
                raise ParseError(f"row {r}, column {c}: invalid digit {ch!r}")
        rows.append([int(ch) for ch in line])
    return np.asarray(rows, dtype=np.uint8)


def to_csv(t: Tensor) -> str:
    """Entries with row headers in the first column, column headers on top."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + [format_composition(b) for b in t.cols])
    for a, row in zip(t.rows, t.entries):
        writer.writerow([format_composition(a)] + [int(v) for v in row])
    return buf.getvalue()


def to_json(t: Tensor) -> str:
    doc = {
        "k": t.k,
        "i": t.i,
        "rows": [format_composition(a) for a in t.rows],
        "cols": [format_composition(b) for b in t.cols],
        "bits": _digit_rows(t),
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(s: str) -> Tensor:
    try:
        doc = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at offset {exc.pos}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level: expected an object")
    for key, kind in (("k", int), ("i", int), ("rows", list),
                      ("cols", list), ("bits", list)):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
        if not isinstance(doc[key], kind) or isinstance(doc[key], bool):
            raise ParseError(f"key {key!r}: expected {kind.__name__}")
    rows = [_parse_header(s, "rows", idx, doc["i"])
            for idx, s in enumerate(doc["rows"])]
    cols = [_parse_header(s, "cols", idx, doc["i"])
            for idx, s in enumerate(doc["cols"])]
    bits = doc["bits"]
    if len(bits) != len(rows):
        raise ParseError(f"bits: expected {len(rows)} rows, got {len(bits)}")
    entries = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for r, line in enumerate(bits):
        if not isinstance(line, str) or len(line) != len(cols):
            raise ParseError(f"bits[{r}]: expected a {len(cols)}-digit string")
        for c, ch in enumerate(line):
            if ch not in "01":
                raise ParseError(f"bits[{r}][{c}]: invalid digit {ch!r}")
            entries[r, c] = ch == "1"
    return Tensor(doc["k"], doc["i"], rows, cols, entries)


def _parse_header(s, field: str, idx: int, parts: int):
    if not isinstance(s, str):
        raise ParseError(f"{field}[{idx}]: expected a string")
    try:
        return parse_composition(s, parts=parts)
    except ParseError as exc:
        raise ParseError(f"{field}[{idx}]: {exc}") from exc


def _column_suffix_class(header) -> BorderClass:
    if len(header) >= 2 and header[-1] == 1 and header[-2] == 1:
        return BorderClass.BLACK
    if header[-1] == 1:
        return BorderClass.DARK
    return BorderClass.THIN


def _row_suffix_class(header) -> BorderClass:
    if len(header) >= 3 and header[-2] == 1 and header[-3] == 1:
        return BorderClass.BLACK
    if len(header) >= 2 and header[-2] == 1:
        return BorderClass.DARK
    return BorderClass.THIN


def border_class(d: GridDecomposition, axis: str, index: int) -> BorderClass:
    """Class of one interior grid segment.

    Vertical segments sit left of column `index` (1..n-1) and are classified
    by that column's header suffix; horizontal segments sit below row `index`
    (0..n-2) and are classified by that row's penultimate entries.  Both
    rules mark exactly the 2-strip boundaries black and the remaining
    1-strip boundaries dark gray.
    """
    if axis not in AXES:
        raise DomainError(f"axis must be one of {AXES}, got {axis!r}")
    if axis == "vertical":
        if not 1 <= index <= d.n - 1:
            raise DomainError(f"vertical segment index {index} is not interior")
        return _column_suffix_class(d.cols[index])
    if not 0 <= index <= d.n - 2:
        raise DomainError(f"horizontal segment index {index} is not interior")
    return _row_suffix_class(d.rows[index])


def _underline_index(header) -> int | None:
    """Entry to underline: first at a 2-strip start, second at a 1-strip start."""
    if len(header) >= 2 and header[-1] == 1 and header[-2] == 1:
        return 0
    if header[-1] == 1 and len(header) >= 2:
        return 1
    return None


_STROKES = {
    BorderClass.THIN: (GRAY_STROKE, 1),
    BorderClass.DARK: (GRAY_STROKE, 3),
    BorderClass.BLACK: (BLACK_STROKE, 3),
}


def _header_tspans(header, x: int | None = None) -> str:
    mark = _underline_index(header)
    multi = any(part > 9 for part in header)
    out = []
    for idx, part in enumerate(header):
        text = str(part) + ("," if multi and idx < len(header) - 1 else "")
        attrs = ""
        if x is not None:
            attrs = f' x="{x}" dy="{12 if idx else 0}"'
        if idx == mark:
            attrs += ' text-decoration="underline"'
        out.append(f"<tspan{attrs}>{text}</tspan>")
    return "".join(out)


def to_svg(d: GridDecomposition, t: Tensor, cell: int = 20) -> str:
    """One unit square per entry, gray for zeros, strokes per border class."""
    if (d.k, d.i) != (t.k, t.i):
        raise DomainError(
            f"decomposition ({d.k},{d.i}) does not match tensor ({t.k},{t.i})")
    n = d.n
    label_w = max(len(format_composition(a)) for a in d.rows)
    left = 8 * label_w + 10
    top = 12 * d.i + 8
    width = left + n * cell + 10
    height = top + n * cell + 10
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" font-family="monospace" font-size="11">',
    ]
    for r, c in sorted(d.zeros):
        parts.append(f'<rect x="{left + c * cell}" y="{top + r * cell}" '
                     f'width="{cell}" height="{cell}" fill="{ZERO_FILL}"/>')
    for c in range(1, n):
        color, w = _STROKES[border_class(d, "vertical", c)]
        x = left + c * cell
        parts.append(f'<line x1="{x}" y1="{top}" x2="{x}" y2="{top + n * cell}" '
                     f'stroke="{color}" stroke-width="{w}"/>')
    for r in range(n - 1):
        color, w = _STROKES[border_class(d, "horizontal", r)]
        y = top + (r + 1) * cell
        parts.append(f'<line x1="{left}" y1="{y}" x2="{left + n * cell}" '
                     f'y2="{y}" stroke="{color}" stroke-width="{w}"/>')
    parts.append(f'<rect x="{left}" y="{top}" width="{n * cell}" '
                 f'height="{n * cell}" fill="none" stroke="{BLACK_STROKE}" '
                 f'stroke-width="3"/>')
    for r, header in enumerate(d.rows):
        y = top + r * cell + cell // 2 + 4
        parts.append(f'<text x="{left - 4}" y="{y}" text-anchor="end">'
                     f"{_header_tspans(header)}</text>")
    for c, header in enumerate(d.cols):
        x = left + c * cell + cell // 2
        parts.append(f'<text x="{x}" y="12" text-anchor="middle">'
                     f"{_header_tspans(header, x=x)}</text>")
    parts.append("</svg>")
    return "\n".join(parts)
