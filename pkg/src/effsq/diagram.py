"""Named diagram documents: groups, homs and the squares and cubes built on them.

Documents are JSON.  Every object and arrow has a name and composite shapes
refer to arrows by name, so endpoints can never be swapped silently.  The
canonical serialization sorts keys and drops insignificant whitespace, which
makes ``serialize(parse(text)) == text`` for any canonical ``text``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import jsonschema

from .errors import EffsqError, IllDefined, NotCommutative, ObjectMismatch, ShapeError
from .groups import FpAbGroup, Hom, make_group, make_hom
from .higher import CUBE_EDGES, Cube
from .squares import Span, Square

VERSION = "effsq/1"
SQUARE_EDGES = ("f", "g", "h", "k")
SPAN_EDGES = ("f", "g")

_NAME = "^[A-Za-z_][A-Za-z0-9_.-]*$"
_ROWS = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}


def _refs(keys):
    return {
        "type": "object",
        "properties": {k: {"type": "string"} for k in keys},
        "required": list(keys),
        "additionalProperties": False,
    }


def _named(schema):
    return {"type": "object", "propertyNames": {"pattern": _NAME}, "additionalProperties": schema}


SCHEMA = {
    "type": "object",
    "properties": {
        "version": {"const": VERSION},
        "class": {"enum": ["all", "mono", "pure", "split", "iso"]},
        "groups": _named({
            "type": "object",
            "properties": {"generators": {"type": "integer", "minimum": 0}, "relations": _ROWS},
            "required": ["generators", "relations"],
            "additionalProperties": False,
        }),
        "homs": _named({
            "type": "object",
            "properties": {"src": {"type": "string"}, "dst": {"type": "string"}, "matrix": _ROWS},
            "required": ["src", "dst", "matrix"],
            "additionalProperties": False,
        }),
        "spans": _named(_refs(SPAN_EDGES)),
        "squares": _named(_refs(SQUARE_EDGES)),
        "cubes": _named(_refs(CUBE_EDGES)),
    },
    "required": ["version", "groups", "homs"],
    "additionalProperties": False,
}


class DiagramError(EffsqError):
    """A document problem, located by a JSON path such as ``$.homs.f.src``."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class NamedHom:
    src: str
    dst: str
    hom: Hom


@dataclass
class DiagramDoc:
    groups: dict[str, FpAbGroup] = field(default_factory=dict)
    homs: dict[str, NamedHom] = field(default_factory=dict)
    spans: dict[str, dict[str, str]] = field(default_factory=dict)
    squares: dict[str, dict[str, str]] = field(default_factory=dict)
    cubes: dict[str, dict[str, str]] = field(default_factory=dict)
    cls: Optional[str] = None

    def hom(self, name: str) -> Hom:
        return self.homs[name].hom

    def span(self, name: str) -> Span:
        r = self.spans[name]
        return Span(self.hom(r["f"]), self.hom(r["g"]))

    def square(self, name: str) -> Square:
        r = self.squares[name]
        return Square(*(self.hom(r[e]) for e in SQUARE_EDGES))

    def cube(self, name: str) -> Cube:
        r = self.cubes[name]
        return Cube(**{e: self.hom(r[e]) for e in CUBE_EDGES})

    def to_json(self) -> dict:
        out = {
            "version": VERSION,
            "groups": {
                n: {"generators": g.num_generators, "relations": [list(r) for r in g.relations]}
                for n, g in self.groups.items()
            },
            "homs": {
                n: {"src": h.src, "dst": h.dst, "matrix": [list(r) for r in h.hom.matrix]}
                for n, h in self.homs.items()
            },
        }
        for key in ("spans", "squares", "cubes"):
            if getattr(self, key):
                out[key] = {n: dict(r) for n, r in getattr(self, key).items()}
        if self.cls is not None:
            out["class"] = self.cls
        return out


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def parse_diagram(text: str) -> DiagramDoc:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    errors = sorted(jsonschema.Draft202012Validator(SCHEMA).iter_errors(raw), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise DiagramError(_path(e.absolute_path), e.message)

    doc = DiagramDoc(cls=raw.get("class"))
    for name, g in raw["groups"].items():
        try:
            doc.groups[name] = make_group(g["generators"], g["relations"])
        except ShapeError as exc:
            raise DiagramError(_path(["groups", name, "relations"]), str(exc)) from None
    for name, h in raw["homs"].items():
        ends = []
        for end in ("src", "dst"):
            if h[end] not in doc.groups:
                raise DiagramError(_path(["homs", name, end]), f"unknown group {h[end]!r}")
            ends.append(doc.groups[h[end]])
        try:
            hom = make_hom(ends[0], ends[1], h["matrix"])
        except IllDefined as exc:
            raise IllDefined(exc.relation_index, f"{_path(['homs', name])}: {exc}") from None
        except ShapeError as exc:
            raise DiagramError(_path(["homs", name, "matrix"]), str(exc)) from None
        doc.homs[name] = NamedHom(h["src"], h["dst"], hom)
    for key, edges, build in (("spans", SPAN_EDGES, doc.span), ("squares", SQUARE_EDGES, doc.square),
                              ("cubes", CUBE_EDGES, doc.cube)):
        for name, refs in raw.get(key, {}).items():
            for e in edges:
                if refs[e] not in doc.homs:
                    raise DiagramError(_path([key, name, e]), f"unknown hom {refs[e]!r}")
            getattr(doc, key)[name] = dict(refs)
            try:
                build(name)
            except (ObjectMismatch, NotCommutative) as exc:
                raise type(exc)(f"{_path([key, name])}: {exc}") from None
    return doc


def serialize_diagram(doc: DiagramDoc) -> str:
    return json.dumps(doc.to_json(), sort_keys=True, separators=(",", ":"))


class DiagramBuilder:
    """Collects objects into a document, naming each one on first sight."""

    def __init__(self, cls: Optional[str] = None):
        self.doc = DiagramDoc(cls=cls)

    def group(self, g: FpAbGroup, name: Optional[str] = None) -> str:
        for n, existing in self.doc.groups.items():
            if existing == g and name is None:
                return n
        name = name or f"G{len(self.doc.groups)}"
        self.doc.groups[name] = g
        return name

    def hom(self, h: Hom, name: Optional[str] = None) -> str:
        for n, existing in self.doc.homs.items():
            if existing.hom == h and name is None:
                return n
        name = name or f"h{len(self.doc.homs)}"
        self.doc.homs[name] = NamedHom(self.group(h.src), self.group(h.dst), h)
        return name

    def span(self, sp: Span, name: str = "span") -> str:
        self.doc.spans[name] = {"f": self.hom(sp.f), "g": self.hom(sp.g)}
        return name

    def square(self, sq: Square, name: str = "square") -> str:
        self.doc.squares[name] = {e: self.hom(getattr(sq, e)) for e in SQUARE_EDGES}
        return name

    def cube(self, cube: Cube, name: str = "cube") -> str:
        self.doc.cubes[name] = {e: self.hom(getattr(cube, e)) for e in CUBE_EDGES}
        return name


def load_fixture(name: str) -> str:
    """Text of a bundled fixture document, e.g. ``load_fixture("fold_square")``."""
    from importlib.resources import files

    return (files("effsq") / "fixtures" / f"{name}.json").read_text(encoding="utf-8")
