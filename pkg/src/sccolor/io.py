"""Text formats for instances and colorings.

Instance file::

    # comment
    scc 1
    colors <k>
    vertices <n>
    arc <tail> <head> <c_tail> <c_head>     (repeat; repeated lines are parallel arcs)

Coloring file: one ``v <vertex> <color>`` line per vertex, any order.
"""
from .conflict import ConflictInstance, normalize
from .errors import DomainError, ParseError


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _int(tok, lineno, what):
    try:
        value = int(tok, 10)
    except ValueError:
        raise ParseError(f"{what} must be a decimal integer, got {tok!r}", lineno) from None
    if value < 0:
        raise ParseError(f"{what} must be nonnegative, got {value}", lineno)
    return value


def parse_instance(text):
    """Parse and normalize an instance; arc directions are kept as written."""
    lines = _content_lines(text)
    expected = [("scc", "header"), ("colors", "color count"), ("vertices", "vertex count")]
    values = []
    last = 0
    for keyword, what in expected:
        try:
            lineno, toks = next(lines)
        except StopIteration:
            raise ParseError(f"missing '{keyword}' line", last + 1) from None
        last = lineno
        if len(toks) != 2 or toks[0] != keyword:
            raise ParseError(f"expected '{keyword} <int>', got {' '.join(toks)!r}", lineno)
        values.append(_int(toks[1], lineno, what))
    version, k, n = values
    if version != 1:
        raise ParseError(f"unsupported format version {version}", 1)
    arcs = []
    for lineno, toks in lines:
        if toks[0] != "arc" or len(toks) != 5:
            raise ParseError(f"expected 'arc <u> <v> <c_tail> <c_head>', got {' '.join(toks)!r}", lineno)
        t, h, a, b = (_int(x, lineno, "arc field") for x in toks[1:])
        if t == h:
            raise ParseError(f"loop arc at vertex {t}", lineno)
        if t >= n or h >= n:
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if a >= k or b >= k:
            raise ParseError(f"color out of range 0..{k - 1}", lineno)
        arcs.append((t, h, a, b))
    return normalize(ConflictInstance.from_arcs(n, k, arcs))


def emit_instance(inst):
    """Canonical text: header, then arcs sorted by (tail, head, c_tail, c_head)."""
    out = ["scc 1", f"colors {inst.k}", f"vertices {inst.n}"]
    out.extend("arc {} {} {} {}".format(*arc) for arc in sorted(inst.arcs))
    return "\n".join(out) + "\n"


def parse_coloring(text, n):
    col = {}
    for lineno, toks in _content_lines(text):
        if toks[0] != "v" or len(toks) != 3:
            raise ParseError(f"expected 'v <vertex> <color>', got {' '.join(toks)!r}", lineno)
        v = _int(toks[1], lineno, "vertex")
        c = _int(toks[2], lineno, "color")
        if v >= n:
            raise ParseError(f"vertex {v} out of range 0..{n - 1}", lineno)
        if v in col:
            raise ParseError(f"vertex {v} colored twice", lineno)
        col[v] = c
    missing = [v for v in range(n) if v not in col]
    if missing:
        raise DomainError(f"coloring misses vertex {missing[0]}")
    return tuple(col[v] for v in range(n))


def emit_coloring(col):
    return "".join(f"v {v} {c}\n" for v, c in enumerate(col))
