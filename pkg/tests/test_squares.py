import pytest
from hypothesis import given, settings, strategies as st

from effsq import brute
from effsq.classes import CHAIN, MorphismClass
from effsq.errors import NotCommutative, ObjectMismatch, PreconditionError
from effsq.generate import GeneratorConfig, InstanceGenerator
from effsq.groups import ZERO, compose, cyclic, free, identity, is_iso, make_group, make_hom, zero_hom
from effsq.squares import (
    Span,
    Square,
    amalgamate_uniqueness,
    complete_span,
    hcompose,
    identity_square,
    is_effective,
    transpose,
    vcompose,
)

Z = free(1)
Z_Z2 = make_group(2, [[0, 2]])
M = MorphismClass
NICE = (M.ALL, M.MONO, M.PURE, M.SPLIT, M.ISO)


def mul(n):
    return make_hom(Z, Z, [[n]])


def fold_square():
    z = zero_hom(ZERO, Z)
    return Square(z, z, identity(Z), identity(Z))


def test_fold_square_not_effective_for_monos():
    v = is_effective(fold_square(), M.MONO)
    assert not v
    assert v.witness["pushout"]["canonical"] == "Z^2"
    assert v.witness["obstruction"]["kernel"] == [[1, -1]]
    assert is_effective(fold_square(), M.ALL)


def test_doubling_span_with_identity_cocone():
    sq = Square(mul(2), mul(2), identity(Z), identity(Z))
    v = is_effective(sq, M.MONO)
    assert not v
    assert v.witness["pushout"]["canonical"] == "Z + Z/2"
    assert v.witness["obstruction"]["kernel"] == [[1, -1]]


@pytest.mark.parametrize("cls", NICE)
def test_pushout_squares_are_effective(cls):
    for sp in (Span(mul(2), mul(3)), Span(make_hom(Z, cyclic(4), [[1]]), mul(6))):
        assert is_effective(complete_span(sp), cls)


def test_non_commuting_square_is_rejected():
    with pytest.raises(NotCommutative):
        Square(mul(2), mul(3), identity(Z), identity(Z))
    with pytest.raises(ObjectMismatch):
        Square(mul(2), make_hom(Z, cyclic(2), [[1]]), identity(Z), identity(Z))


def test_transpose():
    sq = complete_span(Span(mul(2), mul(3)))
    assert transpose(transpose(sq)) == sq
    sym = Square(mul(2), mul(2), mul(5), mul(5))
    assert transpose(sym) == sym


def test_complete_span_examples():
    assert str(complete_span(Span(mul(2), mul(3))).h.dst) == "Z"
    g = make_hom(Z, cyclic(6), [[1]])
    sq = complete_span(Span(identity(Z), g))
    assert is_iso(sq.k)
    assert compose(sq.k, g) == sq.h
    sq = complete_span(Span(make_hom(Z, cyclic(2), [[1]]), make_hom(Z, cyclic(3), [[1]])))
    assert sq.h.dst.is_trivial()


def test_pasting():
    left = complete_span(Span(mul(2), mul(3)))
    ident = Square(left.k, identity(left.k.src), identity(left.k.dst), left.k)
    assert hcompose(left, ident) == left
    right = complete_span(Span(left.k, make_hom(Z, cyclic(5), [[1]])))
    pasted = hcompose(left, right)
    for cls in NICE:
        assert is_effective(pasted, cls)
    top = complete_span(Span(mul(7), left.h))
    assert is_effective(vcompose(left, top), M.PURE)
    with pytest.raises(ObjectMismatch):
        hcompose(left, left)


def test_identity_square_is_effective():
    assert is_effective(identity_square(mul(2)), M.ISO)


def test_amalgamate_identical_completions():
    sp = Span(mul(2), mul(3))
    sq = complete_span(sp)
    v = amalgamate_uniqueness(sp, sq, sq, M.MONO)
    assert v
    assert v.witness["e1"] == v.witness["e2"]


@pytest.mark.parametrize("cls", [M.MONO, M.PURE])
def test_amalgamate_with_split_completion(cls):
    sp = Span(identity(Z), identity(Z))
    sq1 = Square(sp.f, sp.g, identity(Z), identity(Z))
    incl = make_hom(Z, Z_Z2, [[1], [0]])
    sq2 = Square(sp.f, sp.g, incl, incl)
    v = amalgamate_uniqueness(sp, sq1, sq2, cls)
    assert v
    assert v.witness["amalgam"]["canonical"] == "Z + Z/2"


def test_amalgamate_requires_effective_inputs():
    z = zero_hom(ZERO, Z)
    sp = Span(z, z)
    with pytest.raises(PreconditionError):
        amalgamate_uniqueness(sp, complete_span(sp), fold_square(), M.MONO)


def _gen(seed):
    return InstanceGenerator(GeneratorConfig(seed=seed))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([M.ALL, M.MONO, M.PURE]))
def test_effectiveness_symmetric(seed, cls):
    sq = _gen(seed).square(cls)
    assert is_effective(sq, cls).passed == is_effective(transpose(sq), cls).passed


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([M.MONO, M.PURE]))
def test_extension_by_class_member(seed, cls):
    gen = _gen(seed)
    sq = gen.square(cls)
    d = gen.m_map(sq.h.dst, cls)
    before = is_effective(sq, cls).passed
    after = is_effective(sq.extend(d), cls).passed
    assert after == cls.contains(compose(d, sq.induced()))
    if before:
        assert after


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([M.ALL, M.MONO, M.PURE, M.ISO]))
def test_effectiveness_matches_exhaustive_search(seed, cls):
    gen = _gen(seed)
    sq = gen.square_on_span(gen.span(cls, finite=True), cls)
    b, c, d = sq.corners[1:]
    if not brute.within_bound(4096, b, c, d):
        return
    assert brute.effective(sq, cls) == is_effective(sq, cls).passed


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_effectiveness_monotone_along_class_chain(seed):
    gen = _gen(seed)
    sq = gen.square(M.PURE)
    got = [is_effective(sq, c).passed for c in CHAIN]
    assert got == sorted(got, reverse=True)
