"""Seeded random instances for the property suites.

Everything is drawn from a single ``random.Random``, so a seed fixes the
whole instance stream.  Constructions that are supposed to land in a class
(monos, effective squares, valid cubes) are verified before being returned.
"""

from __future__ import annotations

import dataclasses
import hashlib
import random
from dataclasses import dataclass
from typing import Optional

from .classes import MorphismClass
from .errors import PreconditionError
from .groups import (
    ZERO,
    FpAbGroup,
    Hom,
    compose,
    cokernel,
    direct_sum,
    from_columns,
    hom_generators,
    identity,
    is_mono,
    make_group,
    make_hom,
    rebase,
    zero_hom,
)
from .higher import (
    Cube,
    Cubelike,
    Flat,
    NCube,
    cube_dim,
    cube_pushout,
    cube_source,
    cube_target,
    extend_cube,
    from_flat,
    from_square,
    simplify_cube,
    to_flat,
)
from .linalg import identity_matrix, matmul
from .squares import Span, Square, complete_span


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    max_generators: int = 3
    entry_bound: int = 5
    max_relations: int = 3
    trials: int = 200
    # fractions of spans drawn from the degenerate families
    zero_source: float = 0.1
    identity_edges: float = 0.1
    finite_only: float = 0.2
    order_bound: int = 64

    def __post_init__(self):
        for name in ("max_generators", "entry_bound", "max_relations", "trials", "order_bound"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        quotas = (self.zero_source, self.identity_edges, self.finite_only)
        if any(q < 0 for q in quotas) or sum(quotas) > 1:
            raise ValueError("quotas must be nonnegative and sum to at most 1")

    def replace(self, **changes) -> "GeneratorConfig":
        return dataclasses.replace(self, **changes)

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


def trial_seed(seed: int, name: str, index: int) -> int:
    """A 64-bit seed for trial ``index`` of property ``name``."""
    digest = hashlib.sha256(f"{seed}:{name}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


class InstanceGenerator:
    def __init__(self, cfg: GeneratorConfig, seed: Optional[int] = None):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed if seed is None else seed)
        self.finite = False

    # -- groups and maps ---------------------------------------------------

    def unimodular(self, n: int, steps: int = 3) -> list[list[int]]:
        rng = self.rng
        w = [list(r) for r in identity_matrix(n)]
        for _ in range(0 if n == 0 else steps if n > 1 else 1):
            op = rng.random()
            i = rng.randrange(n)
            if op < 0.2:
                w[i] = [-x for x in w[i]]
            elif n > 1:
                j = rng.choice([x for x in range(n) if x != i])
                if op < 0.4:
                    w[i], w[j] = w[j], w[i]
                else:
                    c = rng.choice([-2, -1, 1, 2])
                    w[i] = [a + c * b for a, b in zip(w[i], w[j])]
        return w

    def group(self, finite: Optional[bool] = None, max_gens: Optional[int] = None) -> FpAbGroup:
        rng, cfg = self.rng, self.cfg
        finite = self.finite if finite is None else finite
        top = cfg.max_generators if max_gens is None else max_gens
        n = rng.randint(0, top) if rng.random() < 0.15 else rng.randint(min(1, top), top)
        if n == 0:
            return ZERO
        if finite:
            return self._finite_group(n)
        b = cfg.entry_bound
        k = rng.randint(0, cfg.max_relations)
        rels = [[rng.randint(-b, b) for _ in range(n)] for _ in range(k)]
        return make_group(n, rels)

    def _finite_group(self, n: int) -> FpAbGroup:
        rng = self.rng
        room = self.cfg.order_bound
        diag = []
        for _ in range(n):
            d = rng.randint(1, max(1, min(6, room)))
            diag.append(d)
            room //= d
        rng.shuffle(diag)
        w = self.unimodular(n)
        rels = [[diag[i] * w[i][j] for j in range(n)] for i in range(n)]
        left = self.unimodular(n)
        rels = [list(r) for r in matmul(left, rels, n)]
        if rng.random() < 0.3:
            i, j = rng.randrange(n), rng.randrange(n)
            rels.append([a + b for a, b in zip(rels[i], rels[j])])
        return make_group(n, rels)

    def hom(self, src: FpAbGroup, dst: FpAbGroup) -> Hom:
        rng = self.rng
        if rng.random() < 0.05:
            return zero_hom(src, dst)
        total = zero_hom(src, dst)
        for g in hom_generators(src, dst):
            c = rng.randint(-2, 2)
            if c:
                total = total + Hom(src, dst, tuple(dst.scale(c, col) for col in g.cols))
        return total

    def iso(self, src: FpAbGroup) -> tuple[Hom, Hom]:
        """A random isomorphism out of ``src`` and its inverse."""
        if src.num_generators == 0:
            return identity(src), identity(src)
        _, iso, inv = rebase(src, self.unimodular(src.num_generators))
        return iso, inv

    def mono(self, src: FpAbGroup, split: bool = False) -> Hom:
        """A monomorphism out of ``src``: optionally a scaling (not split),
        then a summand inclusion, then a change of generators."""
        rng = self.rng
        h = identity(src)
        if not split and src.num_generators and rng.random() < 0.5:
            k = rng.choice([2, 3])
            n = src.num_generators
            scaled = make_group(n, [[k * x for x in r] for r in src.relations])
            h = make_hom(src, scaled, [[k * int(i == j) for j in range(n)] for i in range(n)])
        extra = self.group(max_gens=min(2, self.cfg.max_generators)) if rng.random() < 0.6 else ZERO
        ds = direct_sum(h.dst, extra)
        h = compose(ds.inj_left, h)
        iso, _ = self.iso(h.dst)
        h = compose(iso, h)
        assert is_mono(h), "mono construction produced a non-injective map"
        return h

    def m_map(self, src: FpAbGroup, cls) -> Hom:
        if cls is MorphismClass.ALL:
            return self.hom(src, self.group(max_gens=min(2, self.cfg.max_generators)))
        if cls is MorphismClass.MONO:
            return self.mono(src)
        if cls in (MorphismClass.PURE, MorphismClass.SPLIT):
            return self.mono(src, split=True)
        if cls is MorphismClass.ISO:
            return self.iso(src)[0]
        raise PreconditionError(f"no generator for class {cls!r}")

    def any_map(self, src: FpAbGroup) -> Hom:
        """Arbitrary map out of ``src``, biased toward non-injective ones."""
        rng = self.rng
        if rng.random() < 0.5 and src.num_generators:
            x = [rng.randint(-2, 2) for _ in range(src.num_generators)]
            q = cokernel(from_columns(make_group(1, []), src, [x]))
            return q.proj
        return self.hom(src, self.group(max_gens=min(2, self.cfg.max_generators)))

    def killing_map(self, d: FpAbGroup, z) -> Optional[Hom]:
        """Quotient map ``d -> d/<z>``; None when ``z`` is already zero."""
        if not any(d.reduce(z)):
            return None
        return cokernel(from_columns(make_group(1, []), d, [z])).proj

    # -- spans and squares -------------------------------------------------

    def span(self, cls=MorphismClass.ALL, finite: Optional[bool] = None) -> Span:
        rng, cfg = self.rng, self.cfg
        roll = rng.random()
        self.finite = roll < cfg.finite_only if finite is None else finite
        a = ZERO if rng.random() < cfg.zero_source else self.group()
        f = self.m_map(a, cls)
        r = rng.random()
        if r < cfg.identity_edges:
            g = identity(a)
        elif r < 2 * cfg.identity_edges:
            g = f
        else:
            g = self.m_map(a, cls)
        if rng.random() < 0.5:
            f, g = g, f
        return Span(f, g)

    def completion(self, sp: Span, cls, vary: float = 0.5) -> Square:
        """Effective square over ``sp``: the pushout, sometimes pushed on by an M-map."""
        sq = complete_span(sp)
        if self.rng.random() < vary:
            sq = sq.extend(self.m_map(sq.h.dst, cls))
        return sq

    def square_on_span(self, sp: Span, cls=MorphismClass.ALL) -> Square:
        """A commuting square over ``sp`` that may or may not be effective."""
        sq = complete_span(sp)
        if self.rng.random() < 0.5:
            return sq.extend(self.m_map(sq.h.dst, cls))
        return sq.extend(self.any_map(sq.h.dst))

    def effective_square(self, cls=MorphismClass.ALL, vary: float = 0.5) -> Square:
        return self.completion(self.span(cls), cls, vary)

    def square(self, cls=MorphismClass.ALL) -> Square:
        return self.square_on_span(self.span(cls), cls)

    def effective_square_on(self, edge: Hom, cls, vary: float = 0.5) -> Square:
        """Effective square whose ``f`` edge is ``edge``."""
        return self.completion(Span(edge, self.m_map(edge.src, cls)), cls, vary)

    def any_square_on(self, edge: Hom) -> Square:
        """Arbitrary commuting square whose ``f`` edge is ``edge``."""
        g = self.hom(edge.src, self.group(max_gens=min(2, self.cfg.max_generators)))
        return self.square_on_span(Span(edge, g))

    # -- cubes -----------------------------------------------------------------

    def indep_from(self, n: int, a: Cubelike, cls, vary: float = 0.5) -> Cubelike:
        """An n-cube with ``dom == a`` built by pushout completion, independent
        whenever ``a`` is."""
        if n == 1:
            return self.m_map(a, cls)
        g = self.indep_from(n - 1, cube_source(a), cls, vary)
        return self.complete_cubes(a, g, cls, vary)

    def complete_cubes(self, F: Cubelike, G: Cubelike, cls, vary: float = 0.5) -> NCube:
        """Complete a span of cubes by pushout, re-present the apex, and
        sometimes push on with an independent cube."""
        po = cube_pushout(F, G)
        x = extend_cube(from_square(F, G, po.inj_left, po.inj_right), simplify_cube(po.apex))
        if self.rng.random() < vary:
            x = extend_cube(x, self.indep_from(cube_dim(x) - 1, cube_target(x.cod), cls, vary))
        return x

    def indep(self, n: int, cls, vary: float = 0.5) -> Cubelike:
        if n == 0:
            self.finite = self.rng.random() < self.cfg.finite_only
            return self.group()
        return self.indep_from(n, self.indep(n - 1, cls, vary), cls, vary)

    def cube(self, cls, near_miss: bool = False) -> Cube:
        """A valid cube, or with ``near_miss`` one whose far corner has been
        pushed through a map that kills part of the derived image."""
        for _ in range(50):
            cube = Cube.from_ncube(self.indep(3, cls))
            if not near_miss:
                return cube
            bad = self.near_miss(cube)
            if bad is not None:
                return bad
        raise PreconditionError("could not build a near-miss cube")

    def near_miss(self, cube: Cube) -> Optional[Cube]:
        rp = cube.faces()["right"].induced()
        images = [c for c in rp.cols if any(c)]
        if not images:
            return None
        x = self.killing_map(rp.dst, self.rng.choice(images))
        fl = to_flat(cube.to_ncube())
        last = len(fl.verts) - 1
        edges = dict(fl.edges)
        for (v, i), e in fl.edges.items():
            if v | 1 << i == last:
                edges[(v, i)] = compose(x, e)
        verts = list(fl.verts)
        verts[last] = x.dst
        return Cube.from_ncube(from_flat(Flat(fl.dim, verts, edges)))


def gen_group(cfg: GeneratorConfig, rng_seed: Optional[int] = None) -> FpAbGroup:
    return InstanceGenerator(cfg, rng_seed).group()


def gen_hom(cfg: GeneratorConfig, src: FpAbGroup, dst: FpAbGroup) -> Hom:
    return InstanceGenerator(cfg).hom(src, dst)


def gen_mono(cfg: GeneratorConfig, src: FpAbGroup) -> Hom:
    return InstanceGenerator(cfg).mono(src)


def gen_span(cfg: GeneratorConfig, cls=MorphismClass.ALL) -> Span:
    return InstanceGenerator(cfg).span(cls)


def gen_effective_square(cfg: GeneratorConfig, cls) -> Square:
    return InstanceGenerator(cfg).effective_square(cls)


def gen_cube(cfg: GeneratorConfig, cls, near_miss: bool = False) -> Cube:
    return InstanceGenerator(cfg).cube(cls, near_miss)
