"""
Line-oriented text formats.

Blank lines and ``#`` comments are ignored everywhere.  Parse errors raise
``FormatError`` naming the source and line.

surface   ``triangle a b c`` (simplicial) or ``triangle a b c e0 e1 e2``,
          the second form naming the edges opposite each corner
map       ``map v w``
tri3      ``tet i`` and ``glue i f j g p0 p1 p2``
prism     ``prism i``, ``glueh i bot|top j bot|top p0 p1 p2`` and
          ``gluev i q j r p0 p1 p2 p3``
params    ``b=-1; epsilon=o1; g=0; t=0,k=0; h=; kk=; pairs=(2,1),(3,1)``
"""

from __future__ import annotations

import re
from pathlib import Path

from ._labels import label_str
from .manifold3 import Triangulation3, invert_perm
from .prism import BOTTOM, TOP, PrismComplex
from .seifert import SeifertParams
from .surface import SimplicialAutomorphism, SurfaceTriangulation


class FormatError(ValueError):
    def __init__(self, source: str, line: int | None, message: str):
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if words:
            yield n, words


def _ints(words, source, n) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError:
        raise FormatError(source, n, f"expected integers, got {' '.join(words)!r}") from None


def read_text(path) -> tuple[str, str]:
    try:
        return Path(path).read_text(), str(path)
    except OSError as exc:
        raise FormatError(str(path), None, f"cannot read file ({exc.strerror})") from None


# surfaces and maps

def parse_surface(text: str, source: str = "<surface>") -> SurfaceTriangulation:
    triangles, sides = [], []
    for n, words in _lines(text):
        if words[0] != "triangle" or len(words) not in (4, 7):
            raise FormatError(source, n, "expected 'triangle v1 v2 v3' or 'triangle v1 v2 v3 e0 e1 e2'")
        triangles.append(tuple(words[1:4]))
        sides.append(tuple(words[4:]))
    if not triangles:
        raise FormatError(source, None, "no triangles")
    kinds = {len(s) for s in sides}
    if len(kinds) > 1:
        raise FormatError(source, None, "mixes triangles with and without edge names")
    return SurfaceTriangulation(triangles, sides if kinds == {3} else None)


def format_surface(t: SurfaceTriangulation) -> str:
    out = []
    for i, tri in enumerate(t.triangles):
        words = ["triangle", *(label_str(v) for v in tri)]
        if not t.simplicial:
            words += [label_str(e) for e in t.sides[i]]
        out.append(" ".join(words))
    return "\n".join(out) + "\n"


def parse_map(text: str, source: str = "<map>") -> SimplicialAutomorphism:
    mapping = {}
    for n, words in _lines(text):
        if words[0] != "map" or len(words) != 3:
            raise FormatError(source, n, "expected 'map v w'")
        if words[1] in mapping:
            raise FormatError(source, n, f"vertex {words[1]} mapped twice")
        mapping[words[1]] = words[2]
    if sorted(mapping.values()) != sorted(mapping):
        raise FormatError(source, None, "map is not a bijection of its listed vertices")
    return SimplicialAutomorphism(mapping)


def complete_map(f: SimplicialAutomorphism, t: SurfaceTriangulation) -> SimplicialAutomorphism:
    """Vertices not listed in a map file are fixed."""
    mapping = {v: v for v in t.vertices}
    mapping.update(f.vertex_map)
    return SimplicialAutomorphism(mapping)


def format_map(f: SimplicialAutomorphism) -> str:
    items = sorted(f.vertex_map.items(), key=lambda vw: label_str(vw[0]))
    return "".join(f"map {label_str(v)} {label_str(w)}\n" for v, w in items)


# tetrahedral triangulations

def parse_tri3(text: str, source: str = "<tri3>") -> Triangulation3:
    tets = set()
    table = {}
    explicit = set()
    for n, words in _lines(text):
        if words[0] == "tet" and len(words) == 2:
            (i,) = _ints(words[1:], source, n)
            tets.add(i)
        elif words[0] == "glue" and len(words) == 8:
            i, f, j, g, *p = _ints(words[1:], source, n)
            if (i, f) in explicit:
                raise FormatError(source, n, f"face {f} of tet {i} glued twice")
            explicit.add((i, f))
            table[(i, f)] = (j, g, tuple(p))
        else:
            raise FormatError(source, n, "expected 'tet i' or 'glue i f j g p0 p1 p2'")
    if not tets:
        raise FormatError(source, None, "no tetrahedra")
    if tets != set(range(len(tets))):
        raise FormatError(source, None, f"tetrahedra must be numbered 0..{len(tets) - 1}")
    # a gluing given once is completed with its inverse; both given are kept as is
    for (i, f), (j, g, p) in list(table.items()):
        if (j, g) not in table and sorted(p) == [0, 1, 2]:
            table[(j, g)] = (i, f, invert_perm(p))
    return Triangulation3(len(tets), table)


def format_tri3(t: Triangulation3) -> str:
    out = [f"tet {i}" for i in range(t.size)]
    for i, f, j, g, p in t.pairs():
        out.append(f"glue {i} {f} {j} {g} {' '.join(map(str, p))}")
    return "\n".join(out) + "\n"


# prism complexes

_LEVEL = {"bot": BOTTOM, "top": TOP}
_LEVEL_NAME = {BOTTOM: "bot", TOP: "top"}


def parse_prism(text: str, source: str = "<prism>") -> PrismComplex:
    prisms = set()
    table = {}

    def put(n, slot, value):
        if slot in table and table[slot] != value:
            raise FormatError(source, n, f"face {slot} glued twice")
        table[slot] = value

    for n, words in _lines(text):
        head = words[0]
        if head == "prism" and len(words) == 2:
            prisms.update(_ints(words[1:], source, n))
        elif head == "glueh" and len(words) == 8:
            if words[2] not in _LEVEL or words[4] not in _LEVEL:
                raise FormatError(source, n, "horizontal faces are 'bot' or 'top'")
            i, j, *p = _ints([words[1], words[3], *words[5:]], source, n)
            f, g = _LEVEL[words[2]], _LEVEL[words[4]]
            put(n, (i, f), (j, g, tuple(p)))
            if sorted(p) == [0, 1, 2]:
                put(n, (j, g), (i, f, invert_perm(p)))
        elif head == "gluev" and len(words) == 9:
            i, q, j, r, *p = _ints(words[1:], source, n)
            if q not in range(3) or r not in range(3):
                raise FormatError(source, n, "vertical faces are numbered 0, 1, 2")
            f, g = ("v", q), ("v", r)
            put(n, (i, f), (j, g, tuple(p)))
            if sorted(p) == [0, 1, 2, 3]:
                put(n, (j, g), (i, f, invert_perm(p)))
        else:
            raise FormatError(
                source, n, "expected 'prism i', 'glueh i bot|top j bot|top p0 p1 p2' or 'gluev i q j r p0 p1 p2 p3'"
            )
    if not prisms:
        raise FormatError(source, None, "no prisms")
    if prisms != set(range(len(prisms))):
        raise FormatError(source, None, f"prisms must be numbered 0..{len(prisms) - 1}")
    return PrismComplex(len(prisms), table)


def format_prism(c: PrismComplex) -> str:
    out = []
    for i in range(c.size):
        label = c.labels[i] if c.labels else None
        out.append(f"prism {i}" + (f"  # {label}" if label is not None else ""))
    for i, f, j, g, p in c.pairs():
        perm = " ".join(map(str, p))
        if f[0] == "h":
            out.append(f"glueh {i} {_LEVEL_NAME[f]} {j} {_LEVEL_NAME[g]} {perm}")
        else:
            out.append(f"gluev {i} {f[1]} {j} {g[1]} {perm}")
    return "\n".join(out) + "\n"


# Seifert parameters

_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _int_list(value: str, key: str, source: str) -> tuple:
    value = value.strip()
    if not value:
        return ()
    try:
        return tuple(int(x) for x in value.split(","))
    except ValueError:
        raise FormatError(source, None, f"{key} must be a comma separated list of integers") from None


def parse_params(text: str, source: str = "<params>") -> SeifertParams:
    body = " ".join(raw.split("#", 1)[0] for raw in text.splitlines())
    fields = {}
    for chunk in body.split(";"):
        if not chunk.strip():
            continue
        # "t=1,k=0" packs two keys in one chunk
        for key, value in re.findall(r"(\w+)\s*=\s*([^=]*?)(?=,\s*\w+\s*=|$)", chunk.strip()):
            if key in fields:
                raise FormatError(source, None, f"key {key} given twice")
            fields[key] = value.strip()
    known = {"b", "epsilon", "g", "t", "k", "h", "kk", "pairs"}
    unknown = sorted(set(fields) - known)
    if unknown:
        raise FormatError(source, None, f"unknown keys {', '.join(unknown)}")
    kwargs = {}
    try:
        for key in ("b", "g", "t", "k"):
            if key in fields:
                kwargs[key] = int(fields[key])
    except ValueError:
        raise FormatError(source, None, f"{key} must be an integer") from None
    if "epsilon" in fields:
        kwargs["epsilon"] = fields["epsilon"]
    kwargs["h_list"] = _int_list(fields.get("h", ""), "h", source)
    kwargs["k_list"] = _int_list(fields.get("kk", ""), "kk", source)
    pairs_text = fields.get("pairs", "")
    pairs = [(int(p), int(q)) for p, q in _PAIR.findall(pairs_text)]
    if _PAIR.sub("", pairs_text).replace(",", "").strip():
        raise FormatError(source, None, "pairs must look like (p,q),(p,q),...")
    kwargs["pairs"] = tuple(pairs)
    try:
        return SeifertParams(**kwargs)
    except ValueError as exc:
        raise FormatError(source, None, str(exc)) from None


def format_params(s: SeifertParams) -> str:
    pairs = ",".join(f"({p},{q})" for p, q in s.pairs)
    h = ",".join(map(str, s.h_list))
    kk = ",".join(map(str, s.k_list))
    return f"b={s.b}; epsilon={s.epsilon}; g={s.g}; t={s.t},k={s.k}; h={h}; kk={kk}; pairs={pairs}\n"
