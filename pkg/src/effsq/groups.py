"""Finitely presented abelian groups and the homomorphisms between them.

A group is ``Z^n / L`` where ``L`` is the row lattice of an integer relation
matrix.  Elements are integer vectors, always stored in the canonical coset
representative given by :meth:`Lattice.reduce`, so two homomorphisms are
equal exactly when their stored column tuples are equal.

Objects are compared by presentation, never by isomorphism: two groups are
the same object iff they have the same generator count and the same relation
rows.  Use :func:`is_isomorphic` for the weaker question.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

from .errors import (
    BoundExceeded,
    IllDefined,
    InfiniteGroup,
    NotCommutative,
    ObjectMismatch,
    ShapeError,
)
from .linalg import (
    IntMatrix,
    Lattice,
    as_matrix,
    hermite_normal_form,
    identity_matrix,
    smith_normal_form,
    solve_linear,
    transpose,
)

Vector = tuple[int, ...]

DEFAULT_HOM_BOUND = 4096


class CanonicalForm(NamedTuple):
    free_rank: int
    invariant_factors: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.insert(0, "Z")
        elif self.free_rank > 1:
            parts.insert(0, f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


class DiagonalCoords(NamedTuple):
    """A group as a sum of cyclic groups ``Z/moduli[i]`` (0 meaning Z).

    ``forward[i] . x`` is the i-th coordinate of ``x``; ``backward[i]`` is the
    element generating the i-th summand.
    """

    moduli: tuple[int, ...]
    forward: IntMatrix
    backward: IntMatrix


@dataclass(frozen=True)
class FpAbGroup:
    num_generators: int
    relations: IntMatrix = ()

    def __post_init__(self):
        for i, row in enumerate(self.relations):
            if len(row) != self.num_generators:
                raise ShapeError(
                    f"relation {i} has {len(row)} entries, expected {self.num_generators}"
                )

    @cached_property
    def lattice(self) -> Lattice:
        return Lattice(self.relations, self.num_generators)

    @cached_property
    def snf(self):
        return smith_normal_form(self.relations, self.num_generators)

    @cached_property
    def membership_moduli(self) -> tuple[IntMatrix, tuple[int, ...]]:
        """``(Vt, ds)`` such that ``y`` lies in the relation lattice iff
        ``(Vt @ y)[i] % ds[i] == 0`` for all i (modulus 0 meaning equality)."""
        _, d, v = self.snf
        n = self.num_generators
        diag = [d[i][i] if i < len(d) else 0 for i in range(n)]
        return transpose(v, n), tuple(diag)

    @cached_property
    def diagonal(self) -> "DiagonalCoords":
        vt, ds = self.membership_moduli
        keep = tuple(i for i, d in enumerate(ds) if d != 1)
        vinv = unimodular_inverse(self.snf[2]) if self.num_generators else ()
        return DiagonalCoords(tuple(ds[i] for i in keep), tuple(vt[i] for i in keep),
                              tuple(vinv[i] for i in keep))

    def to_diag(self, x: Sequence[int]) -> Vector:
        """Coordinates of ``x`` in the cyclic decomposition, reduced mod each order."""
        dc = self.diagonal
        out = []
        for d, row in zip(dc.moduli, dc.forward):
            c = sum(a * b for a, b in zip(row, x))
            out.append(c % d if d else c)
        return tuple(out)

    def from_diag(self, y: Sequence[int]) -> Vector:
        acc = [0] * self.num_generators
        for c, row in zip(y, self.diagonal.backward):
            if c:
                for j, b in enumerate(row):
                    acc[j] += c * b
        return self.reduce(acc)

    @cached_property
    def canonical_form(self) -> CanonicalForm:
        _, ds = self.membership_moduli
        return CanonicalForm(
            sum(1 for d in ds if d == 0),
            tuple(d for d in ds if d > 1),
        )

    def is_finite(self) -> bool:
        return self.canonical_form.free_rank == 0

    def is_trivial(self) -> bool:
        return self.canonical_form == (0, ())

    def order(self) -> Optional[int]:
        if not self.is_finite():
            return None
        return math.prod(self.canonical_form.invariant_factors)

    def reduce(self, v: Sequence[int]) -> Vector:
        return self.lattice.reduce(v)

    def contains_relation(self, v: Sequence[int]) -> bool:
        return v in self.lattice

    def zero(self) -> Vector:
        return (0,) * self.num_generators

    def basis_vector(self, i: int) -> Vector:
        return self.reduce(tuple(int(j == i) for j in range(self.num_generators)))

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        return self.reduce([a + b for a, b in zip(x, y)])

    def scale(self, n: int, x: Sequence[int]) -> Vector:
        return self.reduce([n * a for a in x])

    def elements(self) -> list[Vector]:
        """All elements of a finite group as canonical representatives."""
        if not self.is_finite():
            raise InfiniteGroup(f"{self} is infinite")
        lat = self.lattice
        bounds = [row[p] for row, p in zip(lat.basis, lat.pivots)]
        return [tuple(x) for x in itertools.product(*(range(b) for b in bounds))]

    def __str__(self) -> str:
        return str(self.canonical_form)


def make_group(num_generators: int, relations: Sequence[Sequence[int]] = ()) -> FpAbGroup:
    rels = as_matrix(relations)
    for i, row in enumerate(rels):
        if len(row) != num_generators:
            raise ShapeError(
                f"relation {i} has {len(row)} columns, group has {num_generators} generators"
            )
    return FpAbGroup(num_generators, rels)


def cyclic(n: int) -> FpAbGroup:
    """``Z/n`` on one generator; ``cyclic(0)`` is ``Z``."""
    return make_group(1, [[n]] if n else [])


def free(rank: int) -> FpAbGroup:
    return make_group(rank, [])


ZERO = make_group(0, [])


def is_isomorphic(a: FpAbGroup, b: FpAbGroup) -> bool:
    return a.canonical_form == b.canonical_form


@dataclass(frozen=True)
class Hom:
    """A homomorphism ``src -> dst``.

    ``cols[j]`` is the image of the j-th generator of ``src``, reduced modulo
    the relations of ``dst``.  Build with :func:`make_hom` (validated) rather
    than directly.
    """

    src: FpAbGroup
    dst: FpAbGroup
    cols: tuple[Vector, ...] = field(default=())

    @property
    def matrix(self) -> IntMatrix:
        # rows indexed by dst generators, columns by src generators
        return transpose(self.cols, self.dst.num_generators)

    def __call__(self, x: Sequence[int]) -> Vector:
        out = [0] * self.dst.num_generators
        for c, col in zip(x, self.cols):
            if c:
                for i, y in enumerate(col):
                    out[i] += c * y
        return self.dst.reduce(out)

    def __matmul__(self, other: "Hom") -> "Hom":
        return compose(self, other)

    def __add__(self, other: "Hom") -> "Hom":
        _same(self.src, other.src, "sum source")
        _same(self.dst, other.dst, "sum target")
        return _hom(self.src, self.dst, [self.dst.add(a, b) for a, b in zip(self.cols, other.cols)])

    def __neg__(self) -> "Hom":
        return _hom(self.src, self.dst, [self.dst.scale(-1, c) for c in self.cols])

    def __sub__(self, other: "Hom") -> "Hom":
        return self + (-other)

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.cols)

    def __str__(self) -> str:
        return f"{self.src} -> {self.dst} {list(map(list, self.matrix))}"


def _hom(src: FpAbGroup, dst: FpAbGroup, cols: Sequence[Sequence[int]]) -> Hom:
    return Hom(src, dst, tuple(dst.reduce(c) for c in cols))


def _same(a: FpAbGroup, b: FpAbGroup, what: str) -> None:
    if a != b:
        raise ObjectMismatch(f"{what}: {a!r} is not the same presentation as {b!r}")


def make_hom(src: FpAbGroup, dst: FpAbGroup, matrix: Sequence[Sequence[int]]) -> Hom:
    """Validate ``matrix`` (dst.ngens x src.ngens) and return the homomorphism.

    Raises :class:`IllDefined` naming the first relation of ``src`` whose
    image is not a relation of ``dst``.
    """
    m, n = dst.num_generators, src.num_generators
    rows = as_matrix(matrix)
    if m == 0:
        if rows and any(len(r) for r in rows):
            raise ShapeError("target has no generators")
        rows = ()
    elif len(rows) != m or any(len(r) != n for r in rows):
        raise ShapeError(f"matrix must be {m}x{n}")
    cols = transpose(rows, n) if m else tuple(() for _ in range(n))
    for i, rel in enumerate(src.relations):
        image = [sum(r * c[k] for r, c in zip(rel, cols)) for k in range(m)]
        if image not in dst.lattice:
            raise IllDefined(i, f"relation {i} {list(rel)} of the source maps to {image}, "
                                 "which is not a relation of the target")
    return _hom(src, dst, cols)


def from_columns(src: FpAbGroup, dst: FpAbGroup, cols: Sequence[Sequence[int]]) -> Hom:
    """Like :func:`make_hom` but takes images of generators directly."""
    return make_hom(src, dst, transpose(cols, dst.num_generators))


def identity(a: FpAbGroup) -> Hom:
    return _hom(a, a, identity_matrix(a.num_generators))


def zero_hom(a: FpAbGroup, b: FpAbGroup) -> Hom:
    return _hom(a, b, [b.zero()] * a.num_generators)


def compose(g: Hom, f: Hom) -> Hom:
    """``g . f`` (apply f first)."""
    _same(f.dst, g.src, "compose")
    return Hom(f.src, g.dst, tuple(g(c) for c in f.cols))


# -- kernels and cokernels ---------------------------------------------------


def _congruence_system(n: int, constraints):
    """Solve ``row . z == rhs (mod m)`` for all constraints, z in Z^n.

    Returns ``(particular or None, generators of the homogeneous solutions)``.
    Modulus 0 means equality; one slack variable is added per modulus >= 2.
    """
    constraints = [c for c in constraints if c[2] != 1]
    slack = [i for i, c in enumerate(constraints) if c[2] != 0]
    width = n + len(slack)
    a, b = [], []
    pos = {i: n + k for k, i in enumerate(slack)}
    for i, (row, rhs, mod) in enumerate(constraints):
        full = list(row) + [0] * len(slack)
        if mod:
            full[pos[i]] = -mod
        a.append(full)
        b.append(rhs)
    z, kernel = solve_linear(a, b, width)
    gens = [k[:n] for k in kernel if any(k[:n])]
    return (None if z is None else tuple(z[:n])), gens


def _membership_constraints(group: FpAbGroup, row_coeffs, rhs):
    """Constraints saying ``sum_k row_coeffs[k] * z - rhs`` lies in group's relations.

    ``row_coeffs`` is a list (one per generator of ``group``) of coefficient
    rows over the unknowns; ``rhs`` is the constant vector.
    """
    vt, ds = group.membership_moduli
    out = []
    for i, d in enumerate(ds):
        if d == 1:
            continue
        width = len(row_coeffs[0]) if row_coeffs else 0
        row = [0] * width
        for k, coef in enumerate(vt[i]):
            if coef:
                rk = row_coeffs[k]
                for j in range(width):
                    row[j] += coef * rk[j]
        out.append((row, sum(c * r for c, r in zip(vt[i], rhs)), d))
    return out


def _subgroup_lattice(h: Hom) -> list[Vector]:
    """HNF basis of ``{x in Z^n : h(x) = 0}`` (contains the source relations)."""
    n = h.src.num_generators
    coeff_rows = [[h.cols[j][i] for j in range(n)] for i in range(h.dst.num_generators)]
    cons = _membership_constraints(h.dst, coeff_rows, h.dst.zero())
    _, gens = _congruence_system(n, cons)
    basis, _ = hermite_normal_form(gens, n)
    return [row for row in basis if any(row)]


@dataclass(frozen=True)
class Kernel:
    group: FpAbGroup
    incl: Hom

    def nonzero_elements(self) -> list[Vector]:
        """Images of the kernel's generators that are nonzero in the source."""
        return [c for c in self.incl.cols if any(c)]

    def __iter__(self):
        yield self.group
        yield self.incl


def kernel(h: Hom) -> Kernel:
    n = h.src.num_generators
    basis = _subgroup_lattice(h)
    sub = Lattice(basis, n, echelon=True)
    rels = []
    for rel in h.src.lattice.basis:
        c = sub.coords(rel)
        assert c is not None, "source relations must lie in the kernel lattice"
        rels.append(c)
    k = make_group(len(basis), rels)
    incl = _hom(k, h.src, basis)
    return Kernel(k, incl)


@dataclass(frozen=True)
class Cokernel:
    group: FpAbGroup
    proj: Hom

    def __iter__(self):
        yield self.group
        yield self.proj


def cokernel(h: Hom) -> Cokernel:
    q = make_group(h.dst.num_generators, list(h.dst.relations) + [list(c) for c in h.cols])
    return Cokernel(q, _hom(h.dst, q, identity_matrix(q.num_generators)))


def is_mono(h: Hom) -> bool:
    return all(row in h.src.lattice for row in _subgroup_lattice(h))


def is_epi(h: Hom) -> bool:
    return cokernel(h).group.is_trivial()


def is_iso(h: Hom) -> bool:
    return is_mono(h) and is_epi(h)


# -- sums and pushouts -------------------------------------------------------


def _block(rows_a, na, rows_b, nb):
    return [list(r) + [0] * nb for r in rows_a] + [[0] * na + list(r) for r in rows_b]


@dataclass(frozen=True)
class DirectSum:
    group: FpAbGroup
    inj_left: Hom
    inj_right: Hom
    proj_left: Hom
    proj_right: Hom


def direct_sum(a: FpAbGroup, b: FpAbGroup) -> DirectSum:
    na, nb = a.num_generators, b.num_generators
    s = make_group(na + nb, _block(a.relations, na, b.relations, nb))
    eye = identity_matrix(na + nb)
    return DirectSum(
        s,
        _hom(a, s, eye[:na]),
        _hom(b, s, eye[na:]),
        _hom(s, a, [e[:na] for e in eye]),
        _hom(s, b, [e[na:] for e in eye]),
    )


def hom_sum(f: Hom, g: Hom) -> tuple[Hom, DirectSum, DirectSum]:
    """``f (+) g`` between the direct sums of sources and targets."""
    s, t = direct_sum(f.src, g.src), direct_sum(f.dst, g.dst)
    nf = f.dst.num_generators
    cols = [tuple(c) + (0,) * g.dst.num_generators for c in f.cols]
    cols += [(0,) * nf + tuple(c) for c in g.cols]
    return _hom(s.group, t.group, cols), s, t


def copair(h: Hom, k: Hom, ds: Optional[DirectSum] = None) -> Hom:
    """The map ``B (+) C -> D`` restricting to h and k."""
    _same(h.dst, k.dst, "copair target")
    ds = ds or direct_sum(h.src, k.src)
    return _hom(ds.group, h.dst, list(h.cols) + list(k.cols))


@dataclass(frozen=True)
class PushoutResult:
    apex: FpAbGroup
    inj_left: Hom
    inj_right: Hom
    f: Hom
    g: Hom


def pushout(f: Hom, g: Hom) -> PushoutResult:
    """Pushout of the span ``B <-f- A -g-> C``.

    The apex is ``(B + C)`` modulo B's relations, C's relations and one
    relation ``(f(a), -g(a))`` per generator ``a`` of A, in that order.
    """
    _same(f.src, g.src, "pushout span source")
    b, c = f.dst, g.dst
    nb, nc = b.num_generators, c.num_generators
    rels = _block(b.relations, nb, c.relations, nc)
    rels += [list(fa) + [-x for x in ga] for fa, ga in zip(f.cols, g.cols)]
    p = make_group(nb + nc, rels)
    eye = identity_matrix(nb + nc)
    return PushoutResult(p, _hom(b, p, eye[:nb]), _hom(c, p, eye[nb:]), f, g)


def induced_map(po: PushoutResult, h: Hom, k: Hom) -> Hom:
    """The unique ``t: P -> D`` with ``t . inj_left == h`` and ``t . inj_right == k``."""
    _same(h.src, po.f.dst, "cocone left leg")
    _same(k.src, po.g.dst, "cocone right leg")
    _same(h.dst, k.dst, "cocone apex")
    if compose(h, po.f) != compose(k, po.g):
        raise NotCommutative("cocone does not commute: h.f != k.g")
    return make_hom(po.apex, h.dst, transpose(list(h.cols) + list(k.cols), h.dst.num_generators)
                    if h.dst.num_generators else ())


# -- automorphisms by change of generators ------------------------------------


def unimodular_inverse(w: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(w)
    h, u = hermite_normal_form(w, n)
    if h != identity_matrix(n):
        raise ValueError("matrix is not unimodular")
    return u


def rebase(a: FpAbGroup, w: Sequence[Sequence[int]]) -> tuple[FpAbGroup, Hom, Hom]:
    """Re-present ``a`` through the unimodular change of generators ``w``.

    Returns ``(a2, iso, inverse)`` where ``iso`` acts on generator columns
    by ``x -> w x``.
    """
    n = a.num_generators
    w = as_matrix(w)
    winv = unimodular_inverse(w)
    wt = transpose(w, n)
    rels = [tuple(sum(r[k] * wt[k][j] for k in range(n)) for j in range(n)) for r in a.relations]
    a2 = make_group(n, rels)
    iso = make_hom(a, a2, w)
    inv = make_hom(a2, a, winv)
    return a2, iso, inv


def simplify(a: FpAbGroup) -> tuple[Hom, Hom]:
    """Isomorphism from ``a`` onto its diagonal presentation, and the inverse."""
    n = a.num_generators
    moduli = a.diagonal.moduli
    m = len(moduli)
    b = make_group(m, [[d * int(i == j) for j in range(m)] for i, d in enumerate(moduli) if d])
    fwd = _hom(a, b, [a.to_diag(_unit(n, l)) for l in range(n)])
    back = _hom(b, a, [a.from_diag(_unit(m, k)) for k in range(m)])
    return fwd, back


# -- enumeration and factorization ------------------------------------------


def enumerate_homs(src: FpAbGroup, dst: FpAbGroup, bound: int = DEFAULT_HOM_BOUND) -> list[Hom]:
    """Every homomorphism between two finite groups, without repetition.

    ``bound`` caps ``|src| * |dst|``.  The source is split into cyclic summands
    via its Smith form and each cyclic generator is sent, independently, to
    every element of ``dst`` its order allows.
    """
    if not src.is_finite() or not dst.is_finite():
        raise InfiniteGroup("enumerate_homs needs finite groups")
    if src.order() * dst.order() > bound:
        raise BoundExceeded(f"|src|*|dst| = {src.order() * dst.order()} exceeds {bound}")
    n = src.num_generators
    _, d, v = src.snf
    orders = [d[j][j] if j < len(d) else 0 for j in range(n)]
    elems = dst.elements()
    choices = []
    for e in orders:
        if e == 1:
            choices.append([dst.zero()])
        else:
            choices.append([x for x in elems if not any(dst.scale(e, x))])
    seen = set()
    out = []
    for images in itertools.product(*choices):
        cols = []
        for i in range(n):
            acc = [0] * dst.num_generators
            for j, z in enumerate(images):
                c = v[i][j]
                if c:
                    for k, y in enumerate(z):
                        acc[k] += c * y
            cols.append(acc)
        h = _hom(src, dst, cols)
        if h.cols not in seen:
            seen.add(h.cols)
            out.append(h)
    return out


def _step(x: int, y: int) -> int:
    """Generator of ``{t : y * t == 0 (mod x)}`` (modulus 0 meaning equality)."""
    if x == 0:
        return 1 if y == 0 else 0
    return x // math.gcd(x, y)


def _unit(n: int, i: int) -> Vector:
    return tuple(int(j == i) for j in range(n))


def _from_diagonal(src: FpAbGroup, dst: FpAbGroup, tp) -> Hom:
    """The hom whose matrix in diagonal coordinates is ``tp`` (dst x src)."""
    cols = []
    for l in range(src.num_generators):
        y = src.to_diag(_unit(src.num_generators, l))
        cols.append(dst.from_diag([sum(a * b for a, b in zip(row, y)) for row in tp]))
    return _hom(src, dst, cols)


def _hom_space(src: FpAbGroup, dst: FpAbGroup, lines, by_rows: bool):
    """Assemble a solution space from independent per-line congruence systems.

    ``lines[i]`` is ``(steps, constraints)`` for row ``i`` (``by_rows``) or
    column ``i`` of the unknown diagonal matrix; an unknown entry is
    ``steps[j] * s_j`` with ``s_j`` free.
    """
    p, q = len(dst.diagonal.moduli), len(src.diagonal.moduli)
    shape = (p, q) if by_rows else (q, p)
    particular = [[0] * shape[1] for _ in range(shape[0])]
    solvable = True
    gens = []
    for i, (steps, cons) in enumerate(lines):
        z, hs = _congruence_system(len(steps), cons)
        if z is None:
            solvable = False
        else:
            particular[i] = [c * x for c, x in zip(steps, z)]
        for h in hs:
            line = [c * x for c, x in zip(steps, h)]
            if any(line):
                g = [[0] * shape[1] for _ in range(shape[0])]
                g[i] = line
                gens.append(g)

    def build(m):
        tp = m if by_rows else [list(r) for r in zip(*m)] if m and m[0] else [[] for _ in range(p)]
        return _from_diagonal(src, dst, tp)

    out = [h for h in (build(g) for g in gens) if not h.is_zero()]
    return (build(particular) if solvable else None), out


def hom_generators(src: FpAbGroup, dst: FpAbGroup) -> list[Hom]:
    """Generators of the group ``Hom(src, dst)``."""
    return factorization_space(zero_hom(ZERO, src), zero_hom(ZERO, dst), "left")[1]


def factorization_space(through: Hom, target: Hom, side: str):
    """All ``t`` with ``t . through == target`` (side ``left``) or
    ``through . t == target`` (side ``right``).

    Returns ``(particular or None, homogeneous generators)``; the solution set
    is the particular solution plus the span of the generators.  Working in
    the Smith coordinates of each group splits the unknown matrix into one
    small congruence system per row (left) or column (right).
    """
    if side == "left":
        _same(through.src, target.src, "left factorization source")
        y, x = through.dst, target.dst
        ym, xm = y.diagonal.moduli, x.diagonal.moduli
        ys = [y.to_diag(c) for c in through.cols]
        xs = [x.to_diag(c) for c in target.cols]
        lines = []
        for i, xi in enumerate(xm):
            steps = [_step(xi, yj) for yj in ym]
            cons = [([c * a for c, a in zip(steps, yk)], xk[i], xi) for yk, xk in zip(ys, xs)]
            lines.append((steps, cons))
        return _hom_space(y, x, lines, by_rows=True)
    if side == "right":
        _same(through.dst, target.dst, "right factorization target")
        s, y, x = target.src, through.src, through.dst
        sm, ym, xm = s.diagonal.moduli, y.diagonal.moduli, x.diagonal.moduli
        thr = [x.to_diag(through(y.from_diag(_unit(len(ym), j)))) for j in range(len(ym))]
        lines = []
        for k, sk in enumerate(sm):
            xk = x.to_diag(target(s.from_diag(_unit(len(sm), k))))
            steps = [_step(yj, sk) for yj in ym]
            cons = [
                ([thr[j][i] * steps[j] for j in range(len(ym))], xk[i], xi)
                for i, xi in enumerate(xm)
            ]
            lines.append((steps, cons))
        return _hom_space(s, y, lines, by_rows=False)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def solve_factorization(through: Hom, target: Hom, side: str) -> Optional[Hom]:
    return factorization_space(through, target, side)[0]


def retraction(h: Hom) -> Optional[Hom]:
    """Some ``r`` with ``r . h == id``, if one exists."""
    return solve_factorization(h, identity(h.src), "left")


def group_json(a: FpAbGroup) -> dict:
    return {
        "generators": a.num_generators,
        "relations": [list(r) for r in a.relations],
        "canonical": str(a.canonical_form),
    }


def hom_json(h: Hom) -> dict:
    return {
        "src": str(h.src),
        "dst": str(h.dst),
        "matrix": [list(r) for r in h.matrix],
    }
