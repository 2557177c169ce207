"""Classes of morphisms and instance-level checks of their closure properties.

Among finitely generated abelian groups a pure subgroup is the same thing as
a direct summand, so purity is decided by searching for a retraction.  That
makes ``PURE`` and ``SPLIT`` coincide as predicates here; both are kept
because callers name them differently.  Regular monos coincide with monos in
an abelian category and get no class of their own.
"""

from __future__ import annotations

from enum import Enum

from .errors import NotCommutative, ObjectMismatch, PreconditionError
from .groups import (
    Hom,
    cokernel,
    compose,
    free,
    from_columns,
    hom_json,
    identity,
    is_epi,
    is_mono,
    kernel,
    pushout,
    retraction,
    solve_factorization,
)
from .verdict import Verdict


class MorphismClass(str, Enum):
    ALL = "all"
    MONO = "mono"
    PURE = "pure"
    SPLIT = "split"
    ISO = "iso"

    def contains(self, h: Hom) -> bool:
        if self is MorphismClass.ALL:
            return True
        if self is MorphismClass.MONO:
            return is_mono(h)
        if self is MorphismClass.ISO:
            return is_mono(h) and is_epi(h)
        return is_pure_mono(h)

    def explain(self, h: Hom) -> Verdict:
        """Membership as a verdict; failures carry the obstruction."""
        if self.contains(h):
            return Verdict.ok(map=hom_json(h))
        if not is_mono(h):
            return Verdict.fail(
                reason="not injective",
                map=hom_json(h),
                kernel=[list(x) for x in kernel(h).nonzero_elements()],
            )
        if self is MorphismClass.ISO:
            q = cokernel(h).group
            return Verdict.fail(reason="not surjective", map=hom_json(h), cokernel=str(q))
        return Verdict.fail(
            reason="image is not a direct summand (no retraction)",
            map=hom_json(h),
            divisibility=divisibility_witness(h),
        )

    def __str__(self) -> str:
        return self.value


# the order in which the bundled classes shrink
CHAIN = (MorphismClass.ALL, MorphismClass.MONO, MorphismClass.PURE, MorphismClass.SPLIT, MorphismClass.ISO)


def parse_class(name: str) -> MorphismClass:
    try:
        return MorphismClass(name)
    except ValueError:
        raise ValueError(f"unknown class {name!r}; expected one of all, mono, pure, split, iso") from None


def contains(cls, h: Hom) -> bool:
    return cls.contains(h)


def _explain(cls, h: Hom) -> Verdict:
    if hasattr(cls, "explain"):
        return cls.explain(h)
    return Verdict.ok() if cls.contains(h) else Verdict.fail(reason="not in class", map=hom_json(h))


def is_pure_mono(h: Hom) -> bool:
    return is_mono(h) and retraction(h) is not None


def is_split_mono(h: Hom) -> bool:
    return retraction(h) is not None


def divisibility_witness(h: Hom):
    """For an injective ``h`` that is not pure: ``n`` and ``b`` with ``n*b`` in
    the image of ``h`` but outside ``n`` times the image.  None if ``h`` is pure.

    Torsion elements of the cokernel that cannot be lifted to elements of the
    same order are exactly the failures of purity, and it is enough to try
    the order-``g`` multiples of each cyclic summand.
    """
    a, b_grp = h.src, h.dst
    q = cokernel(h).group.diagonal
    mul = {}
    for d, gen in zip(q.moduli, q.backward):
        for g in (g for g in range(2, d + 1) if d % g == 0):
            b = b_grp.reduce([x * (d // g) for x in gen])
            nb = from_columns(free(1), b_grp, [b_grp.scale(g, b)])
            pre = solve_factorization(h, nb, "right")
            if pre is None:
                continue
            if g not in mul:
                mul[g] = from_columns(a, a, [a.scale(g, a.basis_vector(i)) for i in range(a.num_generators)])
            if solve_factorization(mul[g], pre, "right") is None:
                return {"n": g, "element": list(b), "multiple": list(nb.cols[0]), "preimage": list(pre.cols[0])}
    return None


# -- closure checkers ----------------------------------------------------------


def check_normal_instance(cls, f: Hom, g: Hom) -> Verdict:
    """``f, g in M`` implies ``g . f in M``; isomorphic inputs must be in M."""
    gf = compose(g, f)
    for name, h in (("f", f), ("g", g)):
        if is_mono(h) and is_epi(h) and not cls.contains(h):
            return Verdict.fail(reason=f"isomorphism {name} not in class", map=hom_json(h))
    if not (cls.contains(f) and cls.contains(g)):
        return Verdict.vacuous_pass("f or g not in class")
    v = _explain(cls, gf)
    if not v:
        return Verdict.fail(reason="composite left the class", composite=v.witness)
    return Verdict.ok(composite=hom_json(gf))


def check_coherent_instance(cls, f: Hom, g: Hom) -> Verdict:
    """``g . f in M`` and ``g in M`` imply ``f in M``."""
    gf = compose(g, f)
    if not (cls.contains(gf) and cls.contains(g)):
        return Verdict.vacuous_pass("g.f or g not in class")
    v = _explain(cls, f)
    if not v:
        return Verdict.fail(reason="left factor not in class", f=v.witness)
    return Verdict.ok()


def check_coclan_instance(cls, m: Hom, g: Hom) -> Verdict:
    """The pushout of ``m in M`` along ``g`` is again in M."""
    if m.src != g.src:
        raise ObjectMismatch("m and g must share a source")
    if not cls.contains(m):
        raise PreconditionError("m is not in the class")
    po = pushout(m, g)
    v = _explain(cls, po.inj_right)
    if not v:
        return Verdict.fail(reason="pushout of m left the class", pushed=v.witness)
    return Verdict.ok(pushed=hom_json(po.inj_right))


def check_retract_closed_instance(cls, f: Hom, g: Hom, u: Hom, v: Hom, r: Hom, s: Hom) -> Verdict:
    """With ``(u, v): g -> f`` and ``(r, s): f -> g`` composing to ``id_g``,
    ``f in M`` implies ``g in M``."""
    if compose(f, u) != compose(v, g):
        raise NotCommutative("(u, v) is not a morphism g -> f")
    if compose(g, r) != compose(s, f):
        raise NotCommutative("(r, s) is not a morphism f -> g")
    if compose(r, u) != identity(g.src) or compose(s, v) != identity(g.dst):
        raise PreconditionError("(r, s) . (u, v) is not the identity on g")
    if not cls.contains(f):
        return Verdict.vacuous_pass("f not in class")
    w = _explain(cls, g)
    if not w:
        return Verdict.fail(reason="retract left the class", g=w.witness)
    return Verdict.ok()
