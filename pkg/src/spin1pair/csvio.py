"""Deterministic CSV rendering: 12 significant digits, LF line endings.

The renderer is intentionally tiny and fixed so that identical inputs
always produce byte-identical output: floats use the shortest ``%.12g``
form, strings pass through unchanged, and rows end with a line feed.
"""


def format_value(v):
    if isinstance(v, str):
        return v
    return "%.12g" % float(v)


def render_csv(header, rows):
    """Comma-separated text for one header plus data rows, LF-terminated."""
    lines = [",".join(str(h) for h in header)]
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"
