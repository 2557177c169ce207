"""Element-level oracles for finite groups.

These decide the same questions as the lattice code by listing elements, so
they are only usable on small finite groups.  They exist to cross-check the
exact algorithms, never the other way round.
"""

from __future__ import annotations

from typing import Optional

from .classes import MorphismClass
from .groups import DEFAULT_HOM_BOUND, FpAbGroup, Hom, compose, enumerate_homs, pushout
from .squares import Square


def image_set(h: Hom) -> set:
    return {h(x) for x in h.src.elements()}


def injective(h: Hom) -> bool:
    return len(image_set(h)) == h.src.order()


def surjective(h: Hom) -> bool:
    return len(image_set(h)) == h.dst.order()


def exponent(a: FpAbGroup) -> int:
    factors = a.canonical_form.invariant_factors
    return factors[-1] if factors else 1


def multiples(a: FpAbGroup, elems, n: int) -> set:
    return {a.scale(n, x) for x in elems}


def pure_by_divisibility(h: Hom) -> bool:
    """Injective, and ``n*dst`` meets the image exactly in ``n*image`` for
    every ``n`` up to the exponent of ``dst``."""
    if not injective(h):
        return False
    dst = h.dst
    image = image_set(h)
    every = dst.elements()
    for n in range(2, exponent(dst) + 1):
        if multiples(dst, every, n) & image != multiples(dst, image, n):
            return False
    return True


def contains(cls, h: Hom) -> bool:
    if cls is MorphismClass.ALL:
        return True
    if cls is MorphismClass.MONO:
        return injective(h)
    if cls is MorphismClass.ISO:
        return injective(h) and surjective(h)
    return pure_by_divisibility(h)


def cocone_factorizations(sq: Square, bound: int = DEFAULT_HOM_BOUND) -> list[Hom]:
    """Every ``t: P -> D`` out of the pushout with ``t.inj_left == h`` and
    ``t.inj_right == k``."""
    po = pushout(sq.f, sq.g)
    return [
        t
        for t in enumerate_homs(po.apex, sq.h.dst, bound)
        if compose(t, po.inj_left) == sq.h and compose(t, po.inj_right) == sq.k
    ]


def effective(sq: Square, cls, bound: int = DEFAULT_HOM_BOUND) -> Optional[bool]:
    """Effectiveness by exhaustive search; None if the cocone does not factor
    uniquely (which would itself be a bug)."""
    ts = cocone_factorizations(sq, bound)
    if len(ts) != 1:
        return None
    return contains(cls, ts[0])


def within_bound(bound: int, *groups: FpAbGroup) -> bool:
    total = 1
    for g in groups:
        if not g.is_finite():
            return False
        total *= g.order()
    return total <= bound
