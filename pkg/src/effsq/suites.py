"""Seeded property suites and their JSON reports.

Every trial gets its own generator seeded from ``(seed, property, index)``,
so a failing trial is replayed from the seed recorded in the report alone.
Reports carry no timing unless asked for; without it a report is a pure
function of the seed and the configuration.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import brute
from .classes import (
    MorphismClass,
    check_coclan_instance,
    check_coherent_instance,
    check_normal_instance,
    check_retract_closed_instance,
    divisibility_witness,
)
from .errors import EffsqError
from .generate import GeneratorConfig, InstanceGenerator, trial_seed
from .groups import (
    Hom,
    cokernel,
    compose,
    copair,
    factorization_space,
    group_json,
    hom_json,
    hom_sum,
    identity,
    induced_map,
    is_epi,
    is_mono,
    kernel,
    make_group,
    pushout,
    rebase,
)
from .higher import (
    ArrowMorphism,
    amalgamate_cubes,
    check_mshriek_coherent,
    check_mshriek_composite,
    check_mshriek_retract,
    coclan_chase,
    complete_cube_span,
    cube_via_mshriek,
    derived_cube,
    derived_square,
    is_cube_effective,
    mshriek_contains,
    ncube_independent,
    paste_cubes,
    transpose_cube,
)
from .linalg import Lattice, determinant, hermite_normal_form, matmul, smith_normal_form
from .squares import (
    Square,
    amalgamate_uniqueness,
    complete_span,
    hcompose,
    induced_is_iso,
    is_effective,
    transpose,
    vcompose,
)
from .verdict import Verdict

REPORT_SCHEMA = "effsq-report/1"
MAX_WITNESSES = 3
SMOKE_TRIALS = 25
PREMISE_ATTEMPTS = 8

Body = Callable[[InstanceGenerator], Verdict]


@dataclass
class PropertyResult:
    name: str
    trials: int = 0
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    failing_seeds: list[int] = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    def record(self, seed: int, verdict: Verdict) -> None:
        self.trials += 1
        if not verdict.passed:
            self.failed += 1
            self.failing_seeds.append(seed)
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append({"seed": seed, **(verdict.witness or {})})
        elif verdict.vacuous:
            self.vacuous += 1
        else:
            self.passed += 1

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "fail": self.failed,
            "vacuous": self.vacuous,
            "failing_seeds": self.failing_seeds,
            "witnesses": self.witnesses,
        }


@dataclass
class Report:
    suite: str
    seed: int
    config: dict
    properties: list[PropertyResult] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties)

    def property(self, name: str) -> PropertyResult:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "seed": self.seed,
            "config": self.config,
            "properties": [p.to_json() for p in self.properties],
            "elapsed_ms": self.elapsed_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"), default=_jsonable)

    def table(self) -> str:
        width = max([len(p.name) for p in self.properties] + [8])
        lines = [f"{self.suite} (seed {self.seed})", f"{'property':<{width}}  pass  fail  vacuous"]
        for p in self.properties:
            lines.append(f"{p.name:<{width}}  {p.passed:>4}  {p.failed:>4}  {p.vacuous:>7}")
            for w in p.witnesses:
                lines.append(f"  failing seed {w['seed']}: {w.get('reason', w.get('error', ''))}")
        if self.elapsed_ms is not None:
            lines.append(f"elapsed {self.elapsed_ms:.0f} ms")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    return str(x)


def run_trial(body: Body, cfg: GeneratorConfig, seed: int) -> Verdict:
    try:
        return body(InstanceGenerator(cfg, seed))
    except EffsqError as exc:
        return Verdict.fail(reason="error", error=f"{type(exc).__name__}: {exc}")
    except AssertionError as exc:
        return Verdict.fail(reason="error", error=f"AssertionError: {exc}")


def run_properties(suite: str, cfg: GeneratorConfig, props, timing: bool = False) -> Report:
    """Run ``props``, a list of ``(name, body, trials)``."""
    start = time.perf_counter()
    report = Report(suite, cfg.seed, cfg.to_json())
    for name, body, trials in props:
        result = PropertyResult(name)
        for i in range(trials):
            seed = trial_seed(cfg.seed, name, i)
            result.record(seed, run_trial(body, cfg, seed))
        report.properties.append(result)
    if timing:
        report.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)
    return report


def _verdict(ok: bool, **witness) -> Verdict:
    return Verdict.ok() if ok else Verdict.fail(**witness)


# -- integer linear algebra ------------------------------------------------------


def random_matrix(gen: InstanceGenerator, max_dim: int = 6, bound: int = 20):
    rng = gen.rng
    r, c = rng.randint(0, max_dim), rng.randint(0, max_dim)
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)], c


def prop_snf(gen: InstanceGenerator) -> Verdict:
    m, c = random_matrix(gen)
    u, d, v = smith_normal_form(m, c)
    r = len(m)
    w = {"matrix": m}
    if matmul(matmul(u, m, c), v, c) != d:
        return Verdict.fail(reason="U*A*V != D", **w)
    if abs(determinant(u)) != 1 or abs(determinant(v)) != 1:
        return Verdict.fail(reason="transform not unimodular", **w)
    diag = []
    for i in range(r):
        for j in range(c):
            if i != j and d[i][j]:
                return Verdict.fail(reason="D not diagonal", **w)
        if i < c:
            diag.append(d[i][i])
    if any(x < 0 for x in diag):
        return Verdict.fail(reason="negative invariant factor", **w)
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a and b % a):
            return Verdict.fail(reason="divisibility chain broken", **w)
    return Verdict.ok()


def prop_hnf(gen: InstanceGenerator) -> Verdict:
    m, c = random_matrix(gen)
    h, u = hermite_normal_form(m, c)
    w = {"matrix": m}
    if matmul(u, m, c) != h:
        return Verdict.fail(reason="U*A != H", **w)
    if m and abs(determinant(u)) != 1:
        return Verdict.fail(reason="transform not unimodular", **w)
    last = -1
    seen_zero = False
    for i, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            seen_zero = True
            continue
        p = nz[0]
        if seen_zero or p <= last or row[p] <= 0:
            return Verdict.fail(reason="not in echelon form", **w)
        if any(not 0 <= h[k][p] < row[p] for k in range(i)):
            return Verdict.fail(reason="entries above pivot not reduced", **w)
        last = p
    hl, ml = Lattice(h, c, echelon=True), Lattice(m, c)
    if any(row not in hl for row in m) or any(row not in ml for row in h):
        return Verdict.fail(reason="row lattices differ", **w)
    return Verdict.ok()


def linalg_properties(cfg: GeneratorConfig):
    return [("snf_contract", prop_snf, cfg.trials), ("hnf_contract", prop_hnf, cfg.trials)]


# -- groups, pushouts, purity ----------------------------------------------------


def prop_canonical_form(gen: InstanceGenerator) -> Verdict:
    a = gen.group()
    n = a.num_generators
    if n == 0:
        return Verdict.ok()
    a2, _, _ = rebase(a, gen.unimodular(n))
    rows = [list(r) for r in a2.relations]
    if rows:
        i, j = gen.rng.randrange(len(rows)), gen.rng.randrange(len(rows))
        c = gen.rng.randint(-2, 2)
        rows.append([x + c * y for x, y in zip(rows[i], rows[j])])
    a3 = make_group(n, rows)
    return _verdict(
        a.canonical_form == a3.canonical_form,
        reason="canonical form changed under re-presentation",
        before=group_json(a), after=group_json(a3),
    )


def prop_pushout_universal(gen: InstanceGenerator) -> Verdict:
    sp = gen.span()
    sq = gen.square_on_span(sp)
    po = pushout(sp.f, sp.g)
    t = induced_map(po, sq.h, sq.k)
    w = {"f": hom_json(sp.f), "g": hom_json(sp.g), "h": hom_json(sq.h), "k": hom_json(sq.k)}
    if compose(t, po.inj_left) != sq.h or compose(t, po.inj_right) != sq.k:
        return Verdict.fail(reason="induced map breaks a cocone equation", **w)
    both = copair(po.inj_left, po.inj_right)
    particular, free = factorization_space(both, copair(sq.h, sq.k), "left")
    if particular is None:
        return Verdict.fail(reason="factorization solver found no mediating map", **w)
    if any(not g.is_zero() for g in free):
        return Verdict.fail(reason="mediating map not unique", **w)
    if brute.within_bound(64 * 64, po.apex, sq.h.dst) and po.apex.order() <= 64 and sq.h.dst.order() <= 64:
        ts = brute.cocone_factorizations(sq)
        if ts != [t]:
            return Verdict.fail(reason="enumeration disagrees", count=len(ts), **w)
    return Verdict.ok()


def prop_pushout_symmetry(gen: InstanceGenerator) -> Verdict:
    sp = gen.span()
    one, two = pushout(sp.f, sp.g), pushout(sp.g, sp.f)
    swap = induced_map(one, two.inj_right, two.inj_left)
    back = induced_map(two, one.inj_right, one.inj_left)
    ok = compose(back, swap) == identity(one.apex) and compose(swap, back) == identity(two.apex)
    return _verdict(ok, reason="swapped pushouts are not isomorphic", f=hom_json(sp.f), g=hom_json(sp.g))


def prop_exactness(gen: InstanceGenerator) -> Verdict:
    a = gen.group()
    h = gen.any_map(a)
    k, q = kernel(h), cokernel(h)
    w = {"h": hom_json(h)}
    if not compose(h, k.incl).is_zero():
        return Verdict.fail(reason="h . incl != 0", **w)
    if not compose(q.proj, h).is_zero():
        return Verdict.fail(reason="proj . h != 0", **w)
    if is_mono(h) != k.group.is_trivial():
        return Verdict.fail(reason="mono test disagrees with kernel", **w)
    if is_epi(h) != q.group.is_trivial():
        return Verdict.fail(reason="epi test disagrees with cokernel", **w)
    return Verdict.ok()


def prop_mono_brute(gen: InstanceGenerator) -> Verdict:
    gen.finite = True
    a = gen.group(finite=True)
    h = gen.any_map(a) if gen.rng.random() < 0.5 else gen.mono(a)
    if not brute.within_bound(4096, h.src, h.dst):
        return Verdict.vacuous_pass("outside enumeration bound")
    return _verdict(is_mono(h) == brute.injective(h), reason="is_mono disagrees with enumeration", h=hom_json(h))


def prop_class_chain(gen: InstanceGenerator) -> Verdict:
    a = gen.group()
    h = gen.any_map(a) if gen.rng.random() < 0.3 else gen.m_map(a, gen.rng.choice(list(MorphismClass)[1:]))
    member = [cls.contains(h) for cls in (MorphismClass.ALL, MorphismClass.MONO, MorphismClass.PURE,
                                          MorphismClass.SPLIT, MorphismClass.ISO)]
    ok = all(b or not c for b, c in zip(member, member[1:]))
    return _verdict(ok, reason="class membership not monotone", h=hom_json(h), membership=member)


def core_properties(cfg: GeneratorConfig):
    n = cfg.trials
    return [
        ("canonical_form_stable", prop_canonical_form, n),
        ("pushout_universal", prop_pushout_universal, n),
        ("pushout_symmetry", prop_pushout_symmetry, n),
        ("exactness", prop_exactness, n),
        ("mono_matches_enumeration", prop_mono_brute, n),
        ("class_chain", prop_class_chain, n),
    ]


def pushout_properties(cfg: GeneratorConfig):
    return [("pushout_universal", prop_pushout_universal, cfg.trials)]


def small_finite_mono(gen: InstanceGenerator, order_bound: int = 64) -> Optional[Hom]:
    gen.finite = True
    for _ in range(50):
        a = gen.group(finite=True)
        h = gen.mono(a, split=gen.rng.random() < 0.4)
        if h.dst.order() <= order_bound:
            return h
    return None


def prop_purity_oracle(gen: InstanceGenerator) -> Verdict:
    h = small_finite_mono(gen)
    if h is None:
        return Verdict.fail(reason="could not draw a small mono")
    fast = MorphismClass.PURE.contains(h)
    slow = brute.pure_by_divisibility(h)
    if fast != slow:
        return Verdict.fail(reason="retraction test disagrees with divisibility", h=hom_json(h),
                            retraction_based=fast, divisibility=slow)
    w = divisibility_witness(h)
    if (w is None) != fast:
        return Verdict.fail(reason="divisibility certificate disagrees", h=hom_json(h), certificate=w)
    if w is not None:
        a, n = h.src, w["n"]
        if tuple(w["preimage"]) in brute.multiples(a, a.elements(), n):
            return Verdict.fail(reason="certificate preimage is divisible", h=hom_json(h), certificate=w)
    return Verdict.ok()


def purity_properties(cfg: GeneratorConfig):
    return [("purity_agrees_with_divisibility", prop_purity_oracle, cfg.trials)]


# -- closure of the classes ---------------------------------------------------------


def closure_properties(cls, cfg: GeneratorConfig):
    def normal(gen):
        a = gen.group()
        f = gen.m_map(a, cls) if gen.rng.random() < 0.8 else gen.any_map(a)
        g = gen.m_map(f.dst, cls)
        return check_normal_instance(cls, f, g)

    def coherent(gen):
        a = gen.group()
        f = gen.m_map(a, cls) if gen.rng.random() < 0.5 else gen.any_map(a)
        g = gen.m_map(f.dst, cls)
        return check_coherent_instance(cls, f, g)

    def coclan(gen):
        a = gen.group()
        return check_coclan_instance(cls, gen.m_map(a, cls), gen.any_map(a))

    def retract(gen):
        a = gen.group()
        g = gen.m_map(a, cls) if gen.rng.random() < 0.7 else gen.any_map(a)
        e = gen.m_map(gen.group(max_gens=1), cls)
        f, s, t = hom_sum(g, e)
        return check_retract_closed_instance(cls, f, g, s.inj_left, t.inj_left, s.proj_left, t.proj_left)

    n = cfg.trials
    return [("normal", normal, n), ("coherent", coherent, n), ("coclan", coclan, n), ("retract_closed", retract, n)]


# -- weak stability of effective squares -------------------------------------------


def weak_stability_properties(cls, cfg: GeneratorConfig):
    def symmetry(gen):
        sq = gen.square(cls)
        a, b = is_effective(sq, cls), is_effective(transpose(sq), cls)
        return _verdict(a.passed == b.passed, reason="transpose changed effectiveness", square=a.witness)

    def transitivity(gen):
        left = gen.effective_square(cls)
        right = gen.effective_square_on(left.k, cls)
        hv = is_effective(hcompose(left, right), cls)
        if not hv:
            return Verdict.fail(reason="horizontal pasting not effective", pasted=hv.witness)
        top = transpose(gen.effective_square_on(left.h, cls))
        vv = is_effective(vcompose(left, top), cls)
        if not vv:
            return Verdict.fail(reason="vertical pasting not effective", pasted=vv.witness)
        return Verdict.ok()

    def existence(gen):
        sp = gen.span(cls)
        sq = complete_span(sp)
        v = is_effective(sq, cls)
        if not v:
            return Verdict.fail(reason="completed span not effective", square=v.witness)
        return _verdict(induced_is_iso(sq), reason="induced map of a pushout square is not an iso")

    def uniqueness(gen):
        sp = gen.span(cls)
        sq1, sq2 = gen.completion(sp, cls), gen.completion(sp, cls)
        return amalgamate_uniqueness(sp, sq1, sq2, cls)

    def extension(gen):
        sq = gen.square(cls)
        d = gen.m_map(sq.h.dst, cls)
        t = sq.induced()
        got = is_effective(sq.extend(d), cls).passed
        want = cls.contains(compose(d, t))
        if got != want:
            return Verdict.fail(reason="extended square disagrees with d.t membership")
        if cls is MorphismClass.MONO and got != is_effective(sq, cls).passed:
            return Verdict.fail(reason="mono extension changed effectiveness")
        return Verdict.ok()

    n = cfg.trials
    return [
        ("symmetry", symmetry, n),
        ("transitivity", transitivity, n),
        ("existence", existence, n),
        ("uniqueness", uniqueness, n),
        ("extension", extension, n),
    ]


def prop_effective_brute(cls) -> Body:
    def body(gen):
        sp = gen.span(cls, finite=True)
        sq = gen.square_on_span(sp, cls)
        po = pushout(sq.f, sq.g)
        if not brute.within_bound(4096, po.apex, sq.h.dst):
            return Verdict.vacuous_pass("outside enumeration bound")
        slow = brute.effective(sq, cls)
        fast = is_effective(sq, cls).passed
        return _verdict(slow == fast, reason="effectiveness disagrees with enumeration", brute=slow, exact=fast)

    return body


# -- the arrow category ---------------------------------------------------------


def mshriek_properties(cls, cfg: GeneratorConfig):
    def normal(gen):
        a = gen.group()
        m1 = gen.any_map(a) if gen.rng.random() < 0.5 else gen.m_map(a, cls)
        m0, m0inv = gen.iso(a)
        m2, _ = gen.iso(m1.dst)
        iso_sq = ArrowMorphism(m1, compose(m2, compose(m1, m0inv)), m2, m0)
        if not mshriek_contains(cls, iso_sq):
            return Verdict.fail(reason="iso square not effective", m1=hom_json(m1))
        first = ArrowMorphism.from_square(gen.effective_square(cls))
        second = ArrowMorphism.from_square(gen.effective_square_on(first.dst_arrow, cls))
        return check_mshriek_composite(cls, first, second)

    def coherent(gen):
        # redraw until the premise holds so that most trials carry evidence
        for _ in range(PREMISE_ATTEMPTS):
            first = ArrowMorphism.from_square(gen.square(cls))
            second = ArrowMorphism.from_square(gen.effective_square_on(first.dst_arrow, cls))
            v = check_mshriek_coherent(cls, first, second)
            if not v.vacuous:
                return v
        return v

    def coclan(gen):
        base = ArrowMorphism.from_square(gen.effective_square(cls))
        side = ArrowMorphism.from_square(gen.any_square_on(base.src_arrow))
        return coclan_chase(base, side, cls)

    def retract(gen):
        for _ in range(PREMISE_ATTEMPTS):
            g = gen.square(cls)
            f, section, back = twisted_sum(gen, g, gen.effective_square(cls))
            v = check_mshriek_retract(cls, g, f, section, back)
            if not v.vacuous:
                return v
        return v

    n = cfg.trials
    return [
        ("a_normal", normal, n),
        ("b_coherent", coherent, n),
        ("c_coclan", coclan, n),
        ("d_retract_closed", retract, n),
    ]


def twisted_sum(gen: InstanceGenerator, g: Square, e: Square):
    """``g (+) e`` moved by a random automorphism at each corner, with the
    section and retraction exhibiting ``g`` as its retract."""
    total, corners = square_sum(g, e)
    isos = [gen.iso(ds.group) for ds in corners]
    f = Square(*(compose(isos[j][0], compose(getattr(total, edge), isos[i][1]))
                 for edge, i, j in (("f", 0, 1), ("g", 0, 2), ("h", 1, 3), ("k", 2, 3))))
    section = [compose(fwd, ds.inj_left) for (fwd, _), ds in zip(isos, corners)]
    back = [compose(ds.proj_left, inv) for (_, inv), ds in zip(isos, corners)]
    return f, section, back


def square_sum(s1: Square, s2: Square):
    """Cornerwise direct sum of two squares, with the corner sums (A, B, C, D)."""
    f, sa, sb = hom_sum(s1.f, s2.f)
    g, _, sc = hom_sum(s1.g, s2.g)
    h, _, sd = hom_sum(s1.h, s2.h)
    k, _, _ = hom_sum(s1.k, s2.k)
    return Square(f, g, h, k), (sa, sb, sc, sd)


# -- cubes ----------------------------------------------------------------------


def cube_properties(cls, cfg: GeneratorConfig, near_miss_trials: Optional[int] = None):
    def agreement(gen):
        cube = gen.cube(cls)
        a = is_cube_effective(cube, cls)
        b = ncube_independent(3, cube.to_ncube(), cls)
        c = cube_via_mshriek(cube, cls)
        d = is_effective(derived_square(cube), cls).passed == ncube_independent(
            2, derived_cube(cube.to_ncube()), cls).passed
        ok = a.passed == b.passed == c and d
        return _verdict(ok, reason="cube evaluations disagree", faces_and_derived=a.passed,
                        recursive=b.passed, mshriek=c, derived_paths_agree=d)

    def near_miss(gen):
        cube = gen.cube(cls, near_miss=True)
        a = is_cube_effective(cube, cls)
        b = ncube_independent(3, cube.to_ncube(), cls)
        if a.passed or b.passed:
            return Verdict.fail(reason="near-miss cube accepted", faces_and_derived=a.passed, recursive=b.passed)
        if not _has_obstruction(a.witness):
            return Verdict.fail(reason="rejection carries no kernel or divisibility witness", witness=a.witness)
        return Verdict.ok()

    k = cfg.trials // 4 if near_miss_trials is None else near_miss_trials
    return [("path_agreement", agreement, cfg.trials), ("near_miss_rejected", near_miss, k)]


def _has_obstruction(w) -> bool:
    if isinstance(w, dict):
        if w.get("kernel") or w.get("divisibility"):
            return True
        return any(_has_obstruction(v) for v in w.values())
    return False


# -- higher dimensions ----------------------------------------------------------


def excellence_properties(cls, cfg: GeneratorConfig, max_n: int, smoke_trials: int = SMOKE_TRIALS):
    props = []
    for n in range(2, max_n + 1):
        trials = cfg.trials if n <= 3 else min(cfg.trials, smoke_trials)
        props += [(f"n{n}_{name}", body, trials) for name, body in _level_bodies(n, cls, max_n)]
    return props


def _level_bodies(n: int, cls, max_n: int):
    def span(gen):
        a = gen.indep(n - 2, cls)
        return gen.indep_from(n - 1, a, cls), gen.indep_from(n - 1, a, cls)

    def existence(gen):
        F, G = span(gen)
        v = ncube_independent(n, complete_cube_span(F, G), cls, max_n)
        return v if not v else Verdict.ok()

    def symmetry(gen):
        x = gen.indep(n, cls) if gen.rng.random() < 0.5 else gen.indep(n, MorphismClass.ALL)
        a = ncube_independent(n, x, cls, max_n).passed
        b = ncube_independent(n, transpose_cube(x), cls, max_n).passed
        return _verdict(a == b, reason="transpose changed independence", before=a, after=b)

    def pasting(gen):
        left = gen.indep(n, cls)
        right = gen.indep_from(n, left.cod, cls)
        v = ncube_independent(n, paste_cubes(left, right), cls, max_n)
        return v if not v else Verdict.ok()

    def uniqueness(gen):
        F, G = span(gen)
        x1 = gen.complete_cubes(F, G, cls)
        x2 = gen.complete_cubes(F, G, cls)
        return amalgamate_cubes(x1, x2, cls, max_n)

    return [("existence", existence), ("symmetry", symmetry), ("pasting", pasting), ("uniqueness", uniqueness)]


# -- registry -------------------------------------------------------------------

SUITES = ("linalg", "core", "pushout", "purity", "closure", "weak-stability", "brute-effective",
          "mshriek", "cubes", "excellence")

CLASS_SUITES = {"closure", "weak-stability", "brute-effective", "mshriek", "cubes", "excellence"}


def suite_properties(name: str, cls=MorphismClass.MONO, cfg: GeneratorConfig = GeneratorConfig(), max_dim: int = 3):
    if name == "linalg":
        return linalg_properties(cfg)
    if name == "core":
        return core_properties(cfg)
    if name == "pushout":
        return pushout_properties(cfg)
    if name == "purity":
        return purity_properties(cfg)
    if name == "closure":
        return closure_properties(cls, cfg)
    if name == "weak-stability":
        return weak_stability_properties(cls, cfg)
    if name == "brute-effective":
        return [("effective_matches_enumeration", prop_effective_brute(cls), cfg.trials)]
    if name == "mshriek":
        return mshriek_properties(cls, cfg)
    if name == "cubes":
        return cube_properties(cls, cfg)
    if name == "excellence":
        return excellence_properties(cls, cfg, max_dim)
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")


def run_suite(name: str, cls=MorphismClass.MONO, cfg: GeneratorConfig = GeneratorConfig(),
              max_dim: int = 3, timing: bool = False) -> Report:
    label = f"{name}[{cls.value}]" if name in CLASS_SUITES else name
    return run_properties(label, cfg, suite_properties(name, cls, cfg, max_dim), timing)


def replay(name: str, prop: str, seed: int, cls=MorphismClass.MONO,
           cfg: GeneratorConfig = GeneratorConfig(), max_dim: int = 3) -> Verdict:
    """Re-run one trial of one property from its recorded seed."""
    for pname, body, _ in suite_properties(name, cls, cfg, max_dim):
        if pname == prop:
            return run_trial(body, cfg, seed)
    raise ValueError(f"suite {name!r} has no property {prop!r}")


def run_weak_stability_suite(cls, cfg: GeneratorConfig, timing: bool = False) -> Report:
    return run_suite("weak-stability", cls, cfg, timing=timing)


def check_mshriek_closure_suite(cls, cfg: GeneratorConfig, timing: bool = False) -> Report:
    return run_suite("mshriek", cls, cfg, timing=timing)


def excellence_probe(max_n: int, cls, cfg: GeneratorConfig, timing: bool = False) -> Report:
    if not 2 <= max_n <= 4:
        raise ValueError("max_n must be between 2 and 4")
    return run_suite("excellence", cls, cfg, max_dim=max_n, timing=timing)
