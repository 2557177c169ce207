"""Arrow-category constructions and n-dimensional independence.

An n-cube is stored recursively as a morphism between two (n-1)-cubes: a
:class:`NCube` has a ``dom`` and ``cod`` plus one leg per vertex of ``dom``.
A 1-cube is just a :class:`Hom` and a 0-cube a group.  Vertex ``v`` of an
n-cube is an n-bit index; the top bit picks ``dom`` (0) or ``cod`` (1).

For n >= 2 an n-cube is also read as a square of (n-2)-cubes, using the two
top directions::

        b --H--> d
        ^        ^
        F        K
        |        |
        a --G--> c

so ``F`` is ``dom``, ``K`` is ``cod`` and ``G``, ``H`` are the slices with
bit n-2 cleared / set.  With n = 2 this is exactly :class:`Square`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .errors import DimensionError, NotCommutative, ObjectMismatch, PreconditionError
from .groups import (
    FpAbGroup,
    Hom,
    PushoutResult,
    compose,
    group_json,
    hom_json,
    identity,
    induced_map,
    pushout,
    simplify,
)
from .squares import Square, is_effective
from .verdict import Verdict

DEFAULT_MAX_DIM = 4


# -- arrow category ------------------------------------------------------------


@dataclass(frozen=True)
class ArrowMorphism:
    """A commuting square read as a morphism ``src_arrow -> dst_arrow`` in K^2.

    ``src_arrow: A -> C``, ``dst_arrow: B -> D``, ``bottom: A -> B``,
    ``top: C -> D`` with ``dst_arrow . bottom == top . src_arrow``.
    """

    src_arrow: Hom
    dst_arrow: Hom
    top: Hom
    bottom: Hom

    def __post_init__(self):
        m1, m3, m2, m0 = self.src_arrow, self.dst_arrow, self.top, self.bottom
        if m0.src != m1.src or m0.dst != m3.src or m2.src != m1.dst or m2.dst != m3.dst:
            raise ObjectMismatch("arrow morphism components do not line up")
        if compose(m3, m0) != compose(m2, m1):
            raise NotCommutative("arrow morphism square does not commute")

    def square(self) -> Square:
        return Square(self.src_arrow, self.bottom, self.top, self.dst_arrow)

    @classmethod
    def from_square(cls, sq: Square) -> "ArrowMorphism":
        return cls(src_arrow=sq.f, dst_arrow=sq.k, top=sq.h, bottom=sq.g)

    def then(self, other: "ArrowMorphism") -> "ArrowMorphism":
        """Composite ``other . self`` in K^2."""
        if other.src_arrow != self.dst_arrow:
            raise ObjectMismatch("arrow morphisms are not composable")
        return ArrowMorphism(
            self.src_arrow,
            other.dst_arrow,
            compose(other.top, self.top),
            compose(other.bottom, self.bottom),
        )


def arrow_identity(m: Hom) -> ArrowMorphism:
    return ArrowMorphism(m, m, identity(m.dst), identity(m.src))


def mshriek_contains(cls, am: ArrowMorphism) -> bool:
    return is_effective(am.square(), cls).passed


@dataclass(frozen=True)
class ArrowPushout:
    apex_arrow: Hom
    # (b, d): m3 -> m3'
    base_leg: ArrowMorphism
    # (m0', m2'): m1' -> m3'
    side_leg: ArrowMorphism
    bottom: PushoutResult
    top: PushoutResult


def arrow_pushout(base: ArrowMorphism, side: ArrowMorphism) -> ArrowPushout:
    """Pushout in K^2 of ``base: m1 -> m3`` and ``side: m1 -> m1'``.

    Computed componentwise; the new arrow ``m3'`` is induced out of the
    bottom pushout and both of its defining equations are checked.
    """
    if base.src_arrow != side.src_arrow:
        raise ObjectMismatch("arrow pushout needs a shared source arrow")
    m3, m1p = base.dst_arrow, side.dst_arrow
    bot = pushout(base.bottom, side.bottom)
    top = pushout(base.top, side.top)
    b, m0p = bot.inj_left, bot.inj_right
    d, m2p = top.inj_left, top.inj_right
    m3p = induced_map(bot, compose(d, m3), compose(m2p, m1p))
    assert compose(m3p, m0p) == compose(m2p, m1p)
    assert compose(m3p, b) == compose(d, m3)
    return ArrowPushout(
        m3p,
        ArrowMorphism(src_arrow=m3, dst_arrow=m3p, top=d, bottom=b),
        ArrowMorphism(src_arrow=m1p, dst_arrow=m3p, top=m2p, bottom=m0p),
        bot,
        top,
    )


def coclan_chase(base: ArrowMorphism, side: ArrowMorphism, cls) -> Verdict:
    """Push an effective ``base`` out along ``side`` and replay why the result
    is effective.

    With ``t: P -> D`` and ``t': P' -> D'`` the two induced maps and ``p: P -> P'``
    the comparison, the square ``(p, t, t', d)`` is shown to be a pushout by
    building the mediating map ``q`` out of ``D'`` for the generic cocone
    ``(u, v)`` and checking every equation it has to satisfy.
    """
    if not mshriek_contains(cls, base):
        raise PreconditionError("base arrow morphism is not effective")
    ap = arrow_pushout(base, side)
    m1, m0, m2, m3 = base.src_arrow, base.bottom, base.top, base.dst_arrow
    m1p, m0p, m2p, m3p = side.dst_arrow, ap.side_leg.bottom, ap.side_leg.top, ap.apex_arrow
    b, d = ap.base_leg.bottom, ap.base_leg.top
    c = side.top

    po = pushout(m1, m0)
    p0, p1 = po.inj_left, po.inj_right
    t = induced_map(po, m2, m3)
    po2 = pushout(m1p, m0p)
    p0p, p1p = po2.inj_left, po2.inj_right
    tp = induced_map(po2, m2p, m3p)
    p = induced_map(po, compose(p0p, c), compose(p1p, b))

    cocone = pushout(p, t)
    u, v = cocone.inj_left, cocone.inj_right
    q = induced_map(ap.top, v, compose(u, p0p))
    back = induced_map(cocone, tp, d)

    checks = {
        "p.p0 = p0'.c": compose(p, p0) == compose(p0p, c),
        "p.p1 = p1'.b": compose(p, p1) == compose(p1p, b),
        "t'.p = d.t": compose(tp, p) == compose(d, t),
        "q.m2' = u.p0'": compose(q, m2p) == compose(u, p0p),
        "q.d = v": compose(q, d) == v,
        "q.m3' = u.p1'": compose(q, m3p) == compose(u, p1p),
        "q.t' = u": compose(q, tp) == u,
        "(p,t,t',d) is a pushout": compose(q, back) == identity(cocone.apex)
        and compose(back, q) == identity(tp.dst),
    }
    eff = is_effective(Square(m1p, m0p, m2p, m3p), cls)
    witness = {"equations": checks, "pushed": eff.witness}
    if not all(checks.values()):
        return Verdict.fail(reason="mediating-map equation failed", **witness)
    if not eff:
        return Verdict.fail(reason="pushed-out square not effective", **witness)
    return Verdict.ok(**witness)


def check_mshriek_composite(cls, first: ArrowMorphism, second: ArrowMorphism) -> Verdict:
    """Both in M! implies ``second . first`` in M!."""
    if not (mshriek_contains(cls, first) and mshriek_contains(cls, second)):
        return Verdict.vacuous_pass("a factor is not effective")
    v = is_effective(first.then(second).square(), cls)
    if not v:
        return Verdict.fail(reason="composite of effective squares not effective", composite=v.witness)
    return Verdict.ok()


def check_mshriek_coherent(cls, first: ArrowMorphism, second: ArrowMorphism) -> Verdict:
    """``second . first`` and ``second`` in M! imply ``first`` in M!."""
    if not (mshriek_contains(cls, first.then(second)) and mshriek_contains(cls, second)):
        return Verdict.vacuous_pass("composite or second factor not effective")
    v = is_effective(first.square(), cls)
    if not v:
        return Verdict.fail(reason="left factor not effective", first=v.witness)
    return Verdict.ok()


def check_mshriek_retract(cls, g: Square, f: Square, section, retraction) -> Verdict:
    """``g`` a retract of ``f`` in the arrow category of K^2: ``section`` and
    ``retraction`` give the four corner maps (A, B, C, D order) of morphisms
    ``g -> f`` and ``f -> g`` composing to the identity on ``g``.  Then
    ``f`` in M! implies ``g`` in M!."""
    there = NCube(square_to_cube(g), square_to_cube(f), tuple(section))
    back = NCube(square_to_cube(f), square_to_cube(g), tuple(retraction))
    if compose_cubes(back, there) != identity_cube(square_to_cube(g)):
        raise PreconditionError("retraction . section is not the identity on g")
    if not is_effective(f, cls):
        return Verdict.vacuous_pass("f not effective")
    v = is_effective(g, cls)
    if not v:
        return Verdict.fail(reason="retract of an effective square not effective", g=v.witness)
    return Verdict.ok()


# -- cubes --------------------------------------------------------------------

CUBE_EDGES = ("a", "b", "c", "d", "f0", "f1", "f0p", "f1p", "g0", "g1", "h0", "h1")


@dataclass(frozen=True)
class Cube:
    """A commutative cube::

                D1 --d--> D2
          f0p /         / f1p
        C1 ----c----> C2
        |   B1 --b--> B2        (h0: B1 -> D1, h1: B2 -> D2)
       g0  /          / g1, f1
        A1 ----a----> A2        (f0: A1 -> B1)
    """

    a: Hom
    b: Hom
    c: Hom
    d: Hom
    f0: Hom
    f1: Hom
    f0p: Hom
    f1p: Hom
    g0: Hom
    g1: Hom
    h0: Hom
    h1: Hom

    def __post_init__(self):
        try:
            self.faces()
        except (ObjectMismatch, NotCommutative) as exc:
            raise type(exc)(f"cube face: {exc}") from None

    def faces(self) -> dict[str, Square]:
        return {
            "bottom": Square(self.a, self.f0, self.f1, self.b),
            "front": Square(self.a, self.g0, self.g1, self.c),
            "rear": Square(self.b, self.h0, self.h1, self.d),
            "top": Square(self.c, self.f0p, self.f1p, self.d),
            "left": Square(self.f0, self.g0, self.h0, self.f0p),
            "right": Square(self.f1, self.g1, self.h1, self.f1p),
        }

    def to_ncube(self) -> "NCube":
        return from_square(
            NCube(self.a, self.b, (self.f0, self.f1)),
            NCube(self.a, self.c, (self.g0, self.g1)),
            NCube(self.b, self.d, (self.h0, self.h1)),
            NCube(self.c, self.d, (self.f0p, self.f1p)),
        )

    @classmethod
    def from_ncube(cls, x: "NCube") -> "Cube":
        if cube_dim(x) != 3:
            raise DimensionError("need a 3-cube")
        F, G, H, K = square_parts(x)
        return cls(
            a=F.dom, b=F.cod, c=K.dom, d=K.cod,
            f0=F.legs[0], f1=F.legs[1], f0p=K.legs[0], f1p=K.legs[1],
            g0=G.legs[0], g1=G.legs[1], h0=H.legs[0], h1=H.legs[1],
        )


def derived_square(cube: Cube) -> Square:
    """Push out the left and right faces and take the induced maps."""
    left = pushout(cube.g0, cube.f0)
    right = pushout(cube.g1, cube.f1)
    q = induced_map(left, cube.f0p, cube.h0)
    qp = induced_map(right, cube.f1p, cube.h1)
    p = induced_map(left, compose(right.inj_left, cube.c), compose(right.inj_right, cube.b))
    return Square(p, q, qp, cube.d)


def is_cube_effective(cube: Cube, cls) -> Verdict:
    faces = cube.faces()
    report = {}
    failed = []
    for name in ("top", "bottom", "front", "rear"):
        v = is_effective(faces[name], cls)
        report[name] = v.passed
        if not v:
            failed.append((name, v.witness))
    dv = is_effective(derived_square(cube), cls)
    report["derived"] = dv.passed
    if failed:
        name, w = failed[0]
        return Verdict.fail(reason=f"{name} face not effective", faces=report, obstruction=w)
    if not dv:
        return Verdict.fail(reason="derived square not effective", faces=report, obstruction=dv.witness)
    return Verdict.ok(faces=report)


def cube_via_mshriek(cube: Cube, cls) -> bool:
    """Cube effectiveness read as membership of the induced K^2-morphism in M!."""
    base = ArrowMorphism(src_arrow=cube.a, dst_arrow=cube.b, top=cube.f1, bottom=cube.f0)
    side = ArrowMorphism(src_arrow=cube.a, dst_arrow=cube.c, top=cube.g1, bottom=cube.g0)
    ap = arrow_pushout(base, side)
    q = induced_map(ap.bottom, cube.h0, cube.f0p)
    qp = induced_map(ap.top, cube.h1, cube.f1p)
    return mshriek_contains(cls, ArrowMorphism(ap.apex_arrow, cube.d, qp, q))


# -- n-cubes --------------------------------------------------------------------

Cubelike = Union[FpAbGroup, Hom, "NCube"]


def cube_dim(x: Cubelike) -> int:
    if isinstance(x, FpAbGroup):
        return 0
    if isinstance(x, Hom):
        return 1
    return x.dim


def cube_source(x: Cubelike) -> Cubelike:
    """Domain of a cube read as a morphism of lower cubes."""
    return x.src if isinstance(x, Hom) else x.dom


def cube_target(x: Cubelike) -> Cubelike:
    return x.dst if isinstance(x, Hom) else x.cod


@dataclass
class Flat:
    dim: int
    verts: list
    edges: dict = field(default_factory=dict)

    def edge(self, v: int, i: int) -> Hom:
        return self.edges[(v, i)]


def to_flat(x: Cubelike) -> Flat:
    if isinstance(x, FpAbGroup):
        return Flat(0, [x], {})
    if isinstance(x, Hom):
        return Flat(1, [x.src, x.dst], {(0, 0): x})
    return x.flat


def restrict(fl: Flat, bit: int, value: int) -> Flat:
    """The face of ``fl`` with coordinate ``bit`` fixed to ``value``."""
    n = fl.dim - 1
    low = (1 << bit) - 1

    def old(w):
        return (w & low) | (value << bit) | ((w >> bit) << (bit + 1))

    verts = [fl.verts[old(w)] for w in range(1 << n)]
    edges = {}
    for w in range(1 << n):
        for j in range(n):
            if not w >> j & 1:
                edges[(w, j)] = fl.edges[(old(w), j if j < bit else j + 1)]
    return Flat(n, verts, edges)


def from_flat(fl: Flat) -> Cubelike:
    if fl.dim == 0:
        return fl.verts[0]
    if fl.dim == 1:
        return fl.edges[(0, 0)]
    top = fl.dim - 1
    half = 1 << top
    return NCube(
        from_flat(restrict(fl, top, 0)),
        from_flat(restrict(fl, top, 1)),
        tuple(fl.edges[(v, top)] for v in range(half)),
    )


def check_commutes(fl: Flat) -> None:
    for (v, i), e in fl.edges.items():
        if e.src != fl.verts[v] or e.dst != fl.verts[v | 1 << i]:
            raise ObjectMismatch(f"edge {(v, i)} has the wrong endpoints")
    for v in range(1 << fl.dim):
        for i in range(fl.dim):
            for j in range(i + 1, fl.dim):
                if v >> i & 1 or v >> j & 1:
                    continue
                one = compose(fl.edges[(v | 1 << i, j)], fl.edges[(v, i)])
                two = compose(fl.edges[(v | 1 << j, i)], fl.edges[(v, j)])
                if one != two:
                    raise NotCommutative(f"face at vertex {v} in directions {i},{j} does not commute")


@dataclass(frozen=True)
class NCube:
    """An n-cube (n >= 2) as a morphism ``dom -> cod`` of (n-1)-cubes."""

    dom: Cubelike
    cod: Cubelike
    legs: tuple[Hom, ...]

    def __post_init__(self):
        if cube_dim(self.dom) != cube_dim(self.cod) or cube_dim(self.dom) < 1:
            raise DimensionError("dom and cod must be cubes of the same dimension >= 1")
        dfl, cfl = to_flat(self.dom), to_flat(self.cod)
        if len(self.legs) != len(dfl.verts):
            raise DimensionError("need one leg per vertex of dom")
        for v, leg in enumerate(self.legs):
            if leg.src != dfl.verts[v] or leg.dst != cfl.verts[v]:
                raise ObjectMismatch(f"leg {v} has the wrong endpoints")
        for (v, i), e in dfl.edges.items():
            w = v | 1 << i
            if compose(cfl.edges[(v, i)], self.legs[v]) != compose(self.legs[w], e):
                raise NotCommutative(f"leg square at vertex {v}, direction {i} does not commute")

    @property
    def dim(self) -> int:
        return cube_dim(self.dom) + 1

    @cached_property
    def flat(self) -> Flat:
        dfl, cfl = to_flat(self.dom), to_flat(self.cod)
        half = len(dfl.verts)
        edges = dict(dfl.edges)
        for (v, i), e in cfl.edges.items():
            edges[(v + half, i)] = e
        top = self.dim - 1
        for v, leg in enumerate(self.legs):
            edges[(v, top)] = leg
        return Flat(self.dim, dfl.verts + cfl.verts, edges)

    def vertices(self) -> list[FpAbGroup]:
        return list(self.flat.verts)


def square_parts(x: NCube):
    """``(F, G, H, K)`` of an n-cube read as a square of (n-2)-cubes."""
    fl = to_flat(x)
    n = fl.dim
    return x.dom, from_flat(restrict(fl, n - 2, 0)), from_flat(restrict(fl, n - 2, 1)), x.cod


def from_square(F: Cubelike, G: Cubelike, H: Cubelike, K: Cubelike) -> NCube:
    """Assemble an n-cube from the four edges of a square of (n-2)-cubes."""
    dims = {cube_dim(c) for c in (F, G, H, K)}
    if len(dims) != 1:
        raise DimensionError("square edges must have equal dimension")
    n = dims.pop() + 1
    s, t = n - 2, n - 1
    ff, gf, hf, kf = map(to_flat, (F, G, H, K))
    half = 1 << t
    verts = ff.verts + kf.verts
    edges = dict(ff.edges)
    for (v, i), e in kf.edges.items():
        edges[(v + half, i)] = e
    for v in range(half):
        side = gf if not v >> s & 1 else hf
        w = v & ((1 << s) - 1)
        edges[(v, t)] = side.edges[(w, s)]
    fl = Flat(n, verts, edges)
    for name, face, bit, val in (("G", G, s, 0), ("H", H, s, 1)):
        if from_flat(restrict(fl, bit, val)) != face:
            raise ObjectMismatch(f"edge {name} does not meet F and K at the shared corners")
    check_commutes(fl)
    return from_flat(fl)


def square_to_cube(sq: Square) -> NCube:
    return NCube(sq.f, sq.k, (sq.g, sq.h))


def cube_to_square(x: NCube) -> Square:
    if x.dim != 2:
        raise DimensionError("need a 2-cube")
    return Square(x.dom, x.legs[0], x.legs[1], x.cod)


def identity_cube(a: Cubelike) -> Cubelike:
    """Identity morphism on a k-cube, as a (k+1)-cube."""
    if isinstance(a, FpAbGroup):
        return identity(a)
    return NCube(a, a, tuple(identity(v) for v in to_flat(a).verts))


def compose_cubes(y: Cubelike, x: Cubelike) -> Cubelike:
    """Vertexwise composite ``y . x`` of morphisms of cubes (along the top direction)."""
    if isinstance(x, Hom):
        return compose(y, x)
    if x.cod != y.dom:
        raise ObjectMismatch("cubes are not composable")
    return NCube(x.dom, y.cod, tuple(compose(b, a) for a, b in zip(x.legs, y.legs)))


@dataclass(frozen=True)
class CubePushout:
    apex: Cubelike
    inj_left: Cubelike
    inj_right: Cubelike
    parts: tuple[PushoutResult, ...]


def cube_pushout(F: Cubelike, G: Cubelike) -> CubePushout:
    """Vertexwise pushout of a span ``b <-F- a -G-> c`` of cubes."""
    if isinstance(F, Hom):
        po = pushout(F, G)
        return CubePushout(po.apex, po.inj_left, po.inj_right, (po,))
    if F.dom != G.dom:
        raise ObjectMismatch("span legs must share a source cube")
    a, b, c = to_flat(F.dom), to_flat(F.cod), to_flat(G.cod)
    parts = tuple(pushout(fl, gl) for fl, gl in zip(F.legs, G.legs))
    edges = {}
    for (v, i) in a.edges:
        w = v | 1 << i
        edges[(v, i)] = induced_map(
            parts[v],
            compose(parts[w].inj_left, b.edges[(v, i)]),
            compose(parts[w].inj_right, c.edges[(v, i)]),
        )
    apex = from_flat(Flat(a.dim, [po.apex for po in parts], edges))
    return CubePushout(
        apex,
        NCube(F.cod, apex, tuple(po.inj_left for po in parts)),
        NCube(G.cod, apex, tuple(po.inj_right for po in parts)),
        parts,
    )


def cube_induced(po: CubePushout, H: Cubelike, K: Cubelike) -> Cubelike:
    if isinstance(H, Hom):
        return induced_map(po.parts[0], H, K)
    return NCube(
        po.apex,
        H.cod,
        tuple(induced_map(p, h, k) for p, h, k in zip(po.parts, H.legs, K.legs)),
    )


def derived_cube(x: NCube) -> Cubelike:
    """The induced (n-1)-cube from the pushout of the ``(F, G)`` span into ``d``."""
    F, G, H, K = square_parts(x)
    return cube_induced(cube_pushout(F, G), H, K)


def complete_cube_span(F: Cubelike, G: Cubelike) -> NCube:
    po = cube_pushout(F, G)
    return from_square(F, G, po.inj_left, po.inj_right)


def transpose_cube(x: NCube) -> NCube:
    F, G, H, K = square_parts(x)
    return from_square(G, F, K, H)


def paste_cubes(left: NCube, right: NCube) -> NCube:
    """Paste ``right`` onto the ``K`` edge of ``left`` (horizontal pasting)."""
    F1, G1, H1, K1 = square_parts(left)
    F2, G2, H2, K2 = square_parts(right)
    if F2 != K1:
        raise ObjectMismatch("right cube's F edge must equal left cube's K edge")
    return from_square(F1, compose_cubes(G2, G1), compose_cubes(H2, H1), K2)


def extend_cube(x: NCube, e: Cubelike) -> NCube:
    """Post-compose the two edges into ``d`` with ``e: d -> d'``."""
    F, G, H, K = square_parts(x)
    return from_square(F, G, compose_cubes(e, H), compose_cubes(e, K))


def simplify_cube(x: Cubelike) -> Cubelike:
    """Isomorphism, one dimension up, from ``x`` onto a copy whose vertices
    carry diagonal presentations."""
    if isinstance(x, FpAbGroup):
        return simplify(x)[0]
    fl = to_flat(x)
    maps = [simplify(v) for v in fl.verts]
    edges = {
        (v, i): compose(maps[v | 1 << i][0], compose(e, maps[v][1]))
        for (v, i), e in fl.edges.items()
    }
    y = from_flat(Flat(fl.dim, [fwd.dst for fwd, _ in maps], edges))
    return NCube(x, y, tuple(fwd for fwd, _ in maps))


def cube_json(x: Cubelike):
    if isinstance(x, FpAbGroup):
        return group_json(x)
    if isinstance(x, Hom):
        return hom_json(x)
    return {"dim": x.dim, "legs": [hom_json(h) for h in x.legs]}


def ncube_independent(n: int, x: Cubelike, cls, max_dim: int = DEFAULT_MAX_DIM) -> Verdict:
    """Independence of an n-cube at level n.

    Level 1 is class membership, level 2 effectiveness of the square; above
    that the four edge faces must be independent at level n-1 and so must
    the derived (n-1)-cube.
    """
    if n > max_dim:
        raise DimensionError(f"dimension {n} exceeds the configured maximum {max_dim}")
    if cube_dim(x) != n:
        raise DimensionError(f"expected a {n}-cube, got dimension {cube_dim(x)}")
    if n == 1:
        return cls.explain(x) if hasattr(cls, "explain") else Verdict(
            cls.contains(x), None if cls.contains(x) else {"reason": "not in class"})
    if n == 2:
        return is_effective(cube_to_square(x), cls)
    for name, face in zip("FGHK", square_parts(x)):
        v = ncube_independent(n - 1, face, cls, max_dim)
        if not v:
            return Verdict.fail(reason=f"face {name} not independent", path=[name], obstruction=v.witness)
    v = ncube_independent(n - 1, derived_cube(x), cls, max_dim)
    if not v:
        return Verdict.fail(reason="derived cube not independent", path=["derived"], obstruction=v.witness)
    return Verdict.ok()


def amalgamate_cubes(x1: NCube, x2: NCube, cls, max_dim: int = DEFAULT_MAX_DIM) -> Verdict:
    """Uniqueness at level n: amalgamate two completions of the same span."""
    n = cube_dim(x1)
    F, G, H1, K1 = square_parts(x1)
    F2, G2, H2, K2 = square_parts(x2)
    if (F, G) != (F2, G2):
        raise ObjectMismatch("cubes do not complete the same span")
    po = cube_pushout(F, G)
    t1 = cube_induced(po, H1, K1)
    t2 = cube_induced(po, H2, K2)
    am = cube_pushout(t1, t2)
    e1, e2 = am.inj_left, am.inj_right
    if compose_cubes(e1, H1) != compose_cubes(e2, H2):
        return Verdict.fail(reason="e1.H1 != e2.H2")
    if compose_cubes(e1, K1) != compose_cubes(e2, K2):
        return Verdict.fail(reason="e1.K1 != e2.K2")
    for name, e in (("e1", e1), ("e2", e2)):
        v = ncube_independent(n - 1, e, cls, max_dim)
        if not v:
            return Verdict.fail(reason=f"amalgam leg {name} not independent", obstruction=v.witness)
    outer = from_square(F, G, compose_cubes(e1, H1), compose_cubes(e1, K1))
    v = ncube_independent(n, outer, cls, max_dim)
    if not v:
        return Verdict.fail(reason="outer cube not independent", obstruction=v.witness)
    return Verdict.ok(amalgam=cube_json(am.apex))
