from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from effsq.errors import IllDefined, ObjectMismatch
from effsq.groups import (
    ZERO,
    compose,
    cokernel,
    cyclic,
    enumerate_homs,
    free,
    identity,
    induced_map,
    is_epi,
    is_iso,
    is_mono,
    kernel,
    make_group,
    make_hom,
    pushout,
    rebase,
    simplify,
    solve_factorization,
    zero_hom,
)
from effsq.classes import MorphismClass
from effsq.generate import GeneratorConfig, InstanceGenerator

Z = free(1)


def mul(n, a=Z):
    return make_hom(a, a, [[n]])


def test_canonical_forms():
    assert str(make_group(1, [[2]])) == "Z/2"
    assert str(make_group(2, [[2, 4], [6, 8]])) == "Z/2 + Z/4"
    g = make_group(1, [])
    assert str(g) == "Z" and g.canonical_form.free_rank == 1


def test_make_hom_validates_relations():
    with pytest.raises(IllDefined):
        make_hom(cyclic(2), cyclic(4), [[1]])
    assert make_hom(cyclic(2), cyclic(4), [[2]]).cols == ((2,),)
    assert make_hom(Z, Z, [[1]]) == identity(Z)


def test_compose_examples():
    f = mul(3)
    assert compose(identity(Z), f) == f
    assert compose(mul(2), mul(3)) == mul(6)
    proj = make_hom(Z, cyclic(4), [[1]])
    assert compose(proj, mul(2)) == make_hom(Z, cyclic(4), [[2]])
    with pytest.raises(ObjectMismatch):
        compose(proj, proj)


def test_kernels():
    assert kernel(mul(2)).group.is_trivial()
    k = kernel(make_hom(Z, cyclic(4), [[1]]))
    assert str(k.group) == "Z" and k.incl.cols == ((4,),)
    k = kernel(make_hom(free(2), Z, [[1, 1]]))
    assert str(k.group) == "Z" and k.incl.cols == ((1, -1),)


def test_cokernels():
    assert str(cokernel(mul(2)).group) == "Z/2"
    assert cokernel(identity(free(2))).group.is_trivial()
    assert str(cokernel(make_hom(Z, free(2), [[2], [-3]])).group) == "Z"


def test_pushouts():
    assert str(pushout(mul(2), mul(3)).apex) == "Z"
    g = make_hom(Z, cyclic(6), [[1]])
    po = pushout(identity(Z), g)
    assert po.apex.canonical_form == g.dst.canonical_form
    assert is_iso(po.inj_right)
    po = pushout(make_hom(Z, cyclic(2), [[1]]), make_hom(Z, cyclic(3), [[1]]))
    assert po.apex.is_trivial()


def test_induced_maps():
    po = pushout(mul(2), mul(3))
    assert induced_map(po, po.inj_left, po.inj_right) == identity(po.apex)
    po = pushout(zero_hom(ZERO, Z), zero_hom(ZERO, Z))
    t = induced_map(po, identity(Z), identity(Z))
    assert t.matrix == ((1, 1),)


def test_mono_epi():
    assert is_mono(mul(2)) and not is_epi(mul(2))
    proj = make_hom(Z, cyclic(4), [[1]])
    assert is_epi(proj) and not is_mono(proj)
    fold = make_hom(free(2), Z, [[1, 1]])
    assert is_epi(fold) and not is_mono(fold)
    assert is_iso(identity(cyclic(5)))


def test_enumerate_homs():
    assert [h.cols for h in enumerate_homs(cyclic(2), cyclic(4))] == [((0,),), ((2,),)]
    assert len(enumerate_homs(cyclic(2), cyclic(3))) == 1
    assert len(enumerate_homs(ZERO, make_group(2, [[3, 0], [0, 5]]))) == 1


def test_solve_factorization():
    assert solve_factorization(mul(2), identity(Z), "left") is None
    f = make_hom(Z, cyclic(4), [[3]])
    assert solve_factorization(identity(Z), f, "left") == f
    b = make_group(2, [[0, 2]])
    incl = make_hom(Z, b, [[1], [0]])
    t = solve_factorization(incl, identity(Z), "left")
    assert t == make_hom(b, Z, [[1, 0]])


def _finite(seed):
    gen = InstanceGenerator(GeneratorConfig(seed=seed))
    return gen, gen.group(finite=True)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_canonical_form_invariant_under_rebase(seed):
    gen, a = _finite(seed)
    w = gen.unimodular(a.num_generators)
    b, fwd, back = rebase(a, w)
    assert b.canonical_form == a.canonical_form
    assert compose(back, fwd) == identity(a)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_simplify_is_an_isomorphism(seed):
    gen = InstanceGenerator(GeneratorConfig(seed=seed))
    a = gen.group()
    iso, inv = simplify(a)
    assert compose(inv, iso) == identity(a)
    assert compose(iso, inv) == identity(iso.dst)
    assert all(len(r) == iso.dst.num_generators for r in iso.dst.relations)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_enumeration_matches_order_of_hom_group(seed):
    gen = InstanceGenerator(GeneratorConfig(seed=seed))
    a, b = gen.group(finite=True), gen.group(finite=True)
    homs = enumerate_homs(a, b)
    assert len(set(homs)) == len(homs)
    expected = 1
    for x in a.canonical_form.invariant_factors:
        for y in b.canonical_form.invariant_factors:
            expected *= gcd(x, y)
    assert len(homs) == expected


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_pushout_cocone_and_kernel_cokernel(seed):
    gen = InstanceGenerator(GeneratorConfig(seed=seed))
    sp = gen.span(MorphismClass.ALL)
    po = pushout(sp.f, sp.g)
    assert compose(po.inj_left, sp.f) == compose(po.inj_right, sp.g)
    h = gen.hom(gen.group(), gen.group())
    k, q = kernel(h), cokernel(h)
    assert compose(h, k.incl).is_zero()
    assert compose(q.proj, h).is_zero()
    assert is_mono(k.incl)

