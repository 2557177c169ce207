"""Commutative squares and M-effectiveness.

A square is stored by its four edges::

        B --h--> D
        ^        ^
        f        k
        |        |
        A --g--> C

It is M-effective when the map from the pushout of ``(f, g)`` into ``D``
belongs to the class M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotCommutative, ObjectMismatch, PreconditionError
from .groups import (
    FpAbGroup,
    Hom,
    PushoutResult,
    compose,
    group_json,
    hom_json,
    identity,
    induced_map,
    is_epi,
    is_mono,
    pushout,
)
from .verdict import Verdict


@dataclass(frozen=True)
class Span:
    f: Hom
    g: Hom

    def __post_init__(self):
        if self.f.src != self.g.src:
            raise ObjectMismatch("span legs must share a source")

    @property
    def apex(self) -> FpAbGroup:
        return self.f.src


@dataclass(frozen=True)
class Square:
    f: Hom
    g: Hom
    h: Hom
    k: Hom

    def __post_init__(self):
        f, g, h, k = self.f, self.g, self.h, self.k
        if f.src != g.src or h.src != f.dst or k.src != g.dst or h.dst != k.dst:
            raise ObjectMismatch("square edges do not meet at shared corners")
        if compose(h, f) != compose(k, g):
            raise NotCommutative("square does not commute: h.f != k.g")

    @property
    def corners(self) -> tuple[FpAbGroup, FpAbGroup, FpAbGroup, FpAbGroup]:
        return self.f.src, self.f.dst, self.g.dst, self.h.dst

    @property
    def span(self) -> Span:
        return Span(self.f, self.g)

    def pushout(self) -> PushoutResult:
        return pushout(self.f, self.g)

    def induced(self) -> Hom:
        return induced_map(self.pushout(), self.h, self.k)

    def extend(self, d: Hom) -> "Square":
        """Post-compose the two edges into D with ``d: D -> E``."""
        return Square(self.f, self.g, compose(d, self.h), compose(d, self.k))


def square_json(sq: Square) -> dict:
    return {e: hom_json(getattr(sq, e)) for e in "fghk"}


def is_effective(sq: Square, cls) -> Verdict:
    po = sq.pushout()
    t = induced_map(po, sq.h, sq.k)
    member = cls.explain(t) if hasattr(cls, "explain") else (
        Verdict.ok() if cls.contains(t) else Verdict.fail(reason="not in class"))
    witness = {"pushout": group_json(po.apex), "induced": hom_json(t)}
    if member:
        return Verdict.ok(**witness)
    return Verdict.fail(**witness, obstruction=member.witness)


def transpose(sq: Square) -> Square:
    return Square(sq.g, sq.f, sq.k, sq.h)


def complete_span(sp: Span) -> Square:
    po = pushout(sp.f, sp.g)
    return Square(sp.f, sp.g, po.inj_left, po.inj_right)


def hcompose(left: Square, right: Square) -> Square:
    """Paste ``right`` onto the right edge ``k`` of ``left``."""
    if right.f != left.k:
        raise ObjectMismatch("right square's left edge must equal left square's right edge")
    return Square(left.f, compose(right.g, left.g), compose(right.h, left.h), right.k)


def vcompose(bottom: Square, top: Square) -> Square:
    """Paste ``top`` onto the top edge ``h`` of ``bottom``."""
    if top.g != bottom.h:
        raise ObjectMismatch("top square's bottom edge must equal bottom square's top edge")
    return Square(compose(top.f, bottom.f), bottom.g, top.h, compose(top.k, bottom.k))


def identity_square(h: Hom) -> Square:
    """The square with ``h`` on both vertical edges and identities across."""
    return Square(h, identity(h.src), identity(h.dst), h)


def amalgamate_uniqueness(sp: Span, sq1: Square, sq2: Square, cls) -> Verdict:
    """Amalgamate two effective completions of ``sp`` over the pushout.

    The amalgam is ``E = pushout(t1, t2)`` of the two induced maps out of
    ``P = pushout(sp)``.  Raises :class:`PreconditionError` if either
    completion is not effective.
    """
    for name, sq in (("first", sq1), ("second", sq2)):
        if sq.f != sp.f or sq.g != sp.g:
            raise ObjectMismatch(f"{name} square does not complete the given span")
        v = is_effective(sq, cls)
        if not v:
            raise PreconditionError(f"{name} completion is not effective: {v.witness}")
    po = pushout(sp.f, sp.g)
    t1 = induced_map(po, sq1.h, sq1.k)
    t2 = induced_map(po, sq2.h, sq2.k)
    amalgam = pushout(t1, t2)
    e1, e2 = amalgam.inj_left, amalgam.inj_right
    witness = {
        "amalgam": group_json(amalgam.apex),
        "e1": hom_json(e1),
        "e2": hom_json(e2),
    }
    if compose(e1, sq1.h) != compose(e2, sq2.h):
        return Verdict.fail(reason="e1.h1 != e2.h2", **witness)
    if compose(e1, sq1.k) != compose(e2, sq2.k):
        return Verdict.fail(reason="e1.k1 != e2.k2", **witness)
    for name, e in (("e1", e1), ("e2", e2)):
        if not cls.contains(e):
            return Verdict.fail(reason=f"amalgam leg {name} not in class", **witness)
    outer = Square(sp.f, sp.g, compose(e1, sq1.h), compose(e1, sq1.k))
    v = is_effective(outer, cls)
    if not v:
        return Verdict.fail(reason="outer square not effective", outer=v.witness, **witness)
    return Verdict.ok(**witness)


def induced_is_iso(sq: Square) -> bool:
    t = sq.induced()
    return is_mono(t) and is_epi(t)
