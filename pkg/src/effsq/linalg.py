"""Exact integer linear algebra on plain Python ints.

Matrices are tuples of row tuples (``IntMatrix``).  A matrix with zero rows
carries its column count separately wherever that matters, so every function
here takes an explicit ``ncols`` when the rows alone cannot tell.
"""

from __future__ import annotations

from typing import Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zero_matrix(nrows: int, ncols: int) -> IntMatrix:
    return tuple((0,) * ncols for _ in range(nrows))


def transpose(m: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    return tuple(tuple(row[j] for row in m) for j in range(ncols))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols_b: int) -> IntMatrix:
    """Product of an r x s matrix by an s x ``ncols_b`` matrix."""
    cols = transpose(b, ncols_b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vecmat(v: Sequence[int], a: Sequence[Sequence[int]], ncols: int) -> tuple[int, ...]:
    out = [0] * ncols
    for x, row in zip(v, a):
        if x:
            for j in range(ncols):
                out[j] += x * row[j]
    return tuple(out)


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; exact for integer input."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Return ``(U, D, V)`` with ``U @ m @ V == D``.

    U and V are unimodular, D is diagonal with nonnegative entries and each
    diagonal entry divides the next.  The pivot is always the nonzero entry of
    least absolute value in the remaining block, ties broken by row-major
    order, so the transforms are reproducible.
    """
    r = len(m)
    c = len(m[0]) if r else (ncols or 0)
    a = [list(row) for row in m]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                row = a[i]
                for j in range(t, c):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, r):
                q = a[i][t] // p
                if q:
                    ai, at = a[i], a[t]
                    for j in range(t, c):
                        ai[j] -= q * at[j]
                    ui, ut = u[i], u[t]
                    for j in range(r):
                        ui[j] -= q * ut[j]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, c):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, r) if any(a[i][j] % p for j in range(t + 1, c))),
                None,
            )
            if bad is None:
                break
            # fold the offending row into the pivot row and go again
            at, ab = a[t], a[bad]
            for j in range(t, c):
                at[j] += ab[j]
            ut, ub = u[t], u[bad]
            for j in range(r):
                ut[j] += ub[j]
        if t < r and t < c and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return as_matrix(u), as_matrix(a), as_matrix(v)


def diagonal(d: Sequence[Sequence[int]]) -> list[int]:
    n = min(len(d), len(d[0]) if d else 0)
    return [d[i][i] for i in range(n)]


def hermite_normal_form(m: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """Return ``(H, U)`` with ``U @ m == H``, H in row Hermite form.

    Pivots are positive and move strictly right going down; entries above a
    pivot lie in ``[0, pivot)``; zero rows sit at the bottom.
    """
    r = len(m)
    c = len(m[0]) if r else (ncols or 0)
    h = [list(row) for row in m]
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    piv = 0
    for col in range(c):
        if piv == r:
            break
        while True:
            best = None
            for i in range(piv, r):
                x = h[i][col]
                if x and (best is None or abs(x) < abs(h[best][col])):
                    best = i
            if best is None:
                break
            if best != piv:
                h[piv], h[best] = h[best], h[piv]
                u[piv], u[best] = u[best], u[piv]
            p = h[piv][col]
            done = True
            for i in range(piv + 1, r):
                q = h[i][col] // p
                if q:
                    hi, hp = h[i], h[piv]
                    for j in range(col, c):
                        hi[j] -= q * hp[j]
                    ui, up = u[i], u[piv]
                    for j in range(r):
                        ui[j] -= q * up[j]
                if h[i][col]:
                    done = False
            if done:
                break
        if h[piv][col] == 0:
            continue
        if h[piv][col] < 0:
            h[piv] = [-x for x in h[piv]]
            u[piv] = [-x for x in u[piv]]
        p = h[piv][col]
        for i in range(piv):
            q = h[i][col] // p
            if q:
                hi, hp = h[i], h[piv]
                for j in range(col, c):
                    hi[j] -= q * hp[j]
                ui, up = u[i], u[piv]
                for j in range(r):
                    ui[j] -= q * up[j]
        piv += 1
    return as_matrix(h), as_matrix(u)


class Lattice:
    """Row lattice of an integer matrix in ``Z^dim`` with a canonical reduction.

    ``reduce`` sends a vector to the unique representative of its coset whose
    pivot coordinates lie in ``[0, pivot)``; two vectors are congruent modulo
    the lattice iff their reductions agree.
    """

    __slots__ = ("dim", "basis", "pivots")

    def __init__(self, rows: Sequence[Sequence[int]], dim: int, echelon: bool = False):
        self.dim = dim
        h = rows if echelon else hermite_normal_form(rows, dim)[0]
        self.basis = [row for row in h if any(row)]
        self.pivots = [next(j for j, x in enumerate(row) if x) for row in self.basis]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        x = list(v)
        for row, p in zip(self.basis, self.pivots):
            q = x[p] // row[p]
            if q:
                for j in range(p, self.dim):
                    x[j] -= q * row[j]
        return tuple(x)

    def __contains__(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Coefficients of ``v`` on ``basis``, or None if ``v`` is outside."""
        x = list(v)
        out = []
        for row, p in zip(self.basis, self.pivots):
            if x[p] % row[p]:
                return None
            q = x[p] // row[p]
            out.append(q)
            if q:
                for j in range(p, self.dim):
                    x[j] -= q * row[j]
        if any(x):
            return None
        return tuple(out)

    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def index(self) -> int:
        """Order of ``Z^dim / L``; only meaningful when the lattice is full rank."""
        out = 1
        for row, p in zip(self.basis, self.pivots):
            out *= row[p]
        return out


def solve_linear(a: Sequence[Sequence[int]], b: Sequence[int], ncols: int):
    """Integer solutions of ``a @ z == b``.

    Returns ``(z, kernel)`` where ``z`` is one solution (None if there is none)
    and ``kernel`` is a basis of the integer null space of ``a``.
    """
    m = len(a)
    if m == 0:
        basis = [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
        return (0,) * ncols, basis
    # U @ a^T = H, so a @ U^T = H^T and z = U^T y turns the system echelon.
    h, u = hermite_normal_form(transpose(a, ncols), m)
    rank = sum(1 for row in h if any(row))
    kernel = [u[i] for i in range(rank, ncols)]
    y = Lattice(h[:rank], m, echelon=True).coords(b)
    if y is None:
        return None, kernel
    z = vecmat(y, u[:rank], ncols)
    return z, kernel


def nullspace(a: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    return solve_linear(a, (0,) * len(a), ncols)[1]
