from hypothesis import given, settings, strategies as st

from effsq.linalg import (
    Lattice,
    determinant,
    diagonal,
    hermite_normal_form,
    matmul,
    smith_normal_form,
    solve_linear,
)


def matrices(max_dim=5, bound=20):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def test_snf_two_by_two():
    u, d, v = smith_normal_form([[2, 4], [6, 8]])
    assert d == ((2, 0), (0, 4))
    assert u == ((1, 0), (3, -1))
    assert v == ((1, -2), (0, 1))


def test_snf_identity_is_fixed():
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert smith_normal_form(ident) == (ident, ident, ident)


def test_snf_already_diagonal():
    u, d, v = smith_normal_form([[1, 0], [0, 0]])
    assert d == ((1, 0), (0, 0))


def test_hnf_examples():
    assert hermite_normal_form([[2], [3]])[0] == ((1,), (0,))
    assert hermite_normal_form([[4], [6]])[0] == ((2,), (0,))
    assert hermite_normal_form([[0, 0], [0, 0]])[0] == ((0, 0), (0, 0))


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_contract(m):
    r, c = len(m), len(m[0])
    u, d, v = smith_normal_form(m)
    assert matmul(matmul(u, m, c), v, c) == d
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1
    ds = diagonal(d)
    assert all(d[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert all(x >= 0 for x in ds)
    for a, b in zip(ds, ds[1:]):
        assert (b == 0) if a == 0 else b % a == 0


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_hnf_spans_same_lattice(m):
    c = len(m[0])
    h, u = hermite_normal_form(m)
    assert matmul(u, m, c) == h
    assert abs(determinant(u)) == 1
    lat_m, lat_h = Lattice(m, c), Lattice(h, c)
    assert all(row in lat_h for row in m) and all(row in lat_m for row in h)
    assert lat_m.basis == lat_h.basis


@settings(max_examples=200, deadline=None)
@given(matrices(4, 9), st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_solve_linear_solutions_are_exact(a, z0):
    c = len(a[0])
    z0 = z0[:c]
    b = tuple(sum(x * y for x, y in zip(row, z0)) for row in a)
    z, ker = solve_linear(a, b, c)
    assert z is not None
    assert tuple(sum(x * y for x, y in zip(row, z)) for row in a) == b
    for k in ker:
        assert all(sum(x * y for x, y in zip(row, k)) == 0 for row in a)


def test_solve_linear_reports_no_solution():
    z, _ = solve_linear([[2]], (1,), 1)
    assert z is None
