import pytest
from hypothesis import given, settings, strategies as st

from effsq.classes import MorphismClass
from effsq.diagram import load_fixture, parse_diagram
from effsq.errors import DimensionError, NotCommutative, PreconditionError
from effsq.generate import GeneratorConfig, InstanceGenerator
from effsq.groups import ZERO, compose, cyclic, free, identity, is_iso, make_hom, zero_hom
from effsq.higher import (
    ArrowMorphism,
    Cube,
    amalgamate_cubes,
    arrow_identity,
    arrow_pushout,
    check_mshriek_retract,
    coclan_chase,
    complete_cube_span,
    cube_dim,
    cube_to_square,
    cube_via_mshriek,
    derived_square,
    identity_cube,
    is_cube_effective,
    mshriek_contains,
    ncube_independent,
    paste_cubes,
    square_parts,
    square_to_cube,
    transpose_cube,
)
from effsq.squares import Span, Square, complete_span, is_effective

Z = free(1)
M = MorphismClass


def mul(n, a=Z):
    return make_hom(a, a, [[n]])


def identity_cube3(a=Z):
    i = identity(a)
    return Cube(**{e: i for e in ("a", "b", "c", "d", "f0", "f1", "f0p", "f1p", "g0", "g1", "h0", "h1")})


def test_arrow_pushout_along_identity():
    base = ArrowMorphism.from_square(complete_span(Span(mul(2), mul(3))))
    ap = arrow_pushout(base, arrow_identity(base.src_arrow))
    assert is_iso(ap.base_leg.bottom) and is_iso(ap.base_leg.top)
    assert compose(ap.apex_arrow, ap.base_leg.bottom) == compose(ap.base_leg.top, base.dst_arrow)


def test_arrow_pushout_of_identity_arrows_is_iso():
    base = arrow_identity(identity(Z))
    side = ArrowMorphism(identity(Z), make_hom(cyclic(4), cyclic(4), [[1]]),
                         make_hom(Z, cyclic(4), [[1]]), make_hom(Z, cyclic(4), [[1]]))
    ap = arrow_pushout(base, side)
    assert is_iso(ap.apex_arrow)


def test_arrow_pushout_doubling_instance():
    base = ArrowMorphism(src_arrow=mul(2), dst_arrow=mul(2), top=mul(2), bottom=mul(2))
    side = ArrowMorphism(src_arrow=mul(2), dst_arrow=mul(2), top=mul(3), bottom=mul(3))
    ap = arrow_pushout(base, side)
    m0p, m2p = ap.side_leg.bottom, ap.side_leg.top
    b, d = ap.base_leg.bottom, ap.base_leg.top
    assert compose(ap.apex_arrow, m0p) == compose(m2p, side.dst_arrow)
    assert compose(ap.apex_arrow, b) == compose(d, base.dst_arrow)
    assert str(ap.bottom.apex) == "Z" and str(ap.top.apex) == "Z"


def test_mshriek_examples():
    z = zero_hom(ZERO, Z)
    fold = ArrowMorphism.from_square(Square(z, z, identity(Z), identity(Z)))
    assert not mshriek_contains(M.MONO, fold)
    for cls in (M.ALL, M.MONO, M.PURE, M.ISO):
        assert mshriek_contains(cls, arrow_identity(mul(2)))
        assert mshriek_contains(cls, ArrowMorphism.from_square(complete_span(Span(mul(2), mul(3)))))


def test_coclan_chase_equations():
    base = ArrowMorphism.from_square(complete_span(Span(mul(2), mul(3))))
    side = ArrowMorphism(base.src_arrow, mul(2), mul(5), mul(5))
    v = coclan_chase(base, side, M.MONO)
    assert v and all(v.witness["equations"].values())


def test_coclan_chase_needs_effective_base():
    base = ArrowMorphism(src_arrow=mul(2), dst_arrow=mul(2), top=mul(2), bottom=mul(2))
    with pytest.raises(PreconditionError):
        coclan_chase(base, arrow_identity(mul(2)), M.MONO)


def test_mshriek_identity_retract():
    sq = complete_span(Span(mul(2), mul(3)))
    ids = [identity(x) for x in sq.corners]
    assert check_mshriek_retract(M.MONO, sq, sq, ids, ids)


def test_identity_cube():
    cube = identity_cube3()
    d = derived_square(cube)
    assert d.k == identity(Z)
    assert all(is_iso(getattr(d, e)) for e in "fgh")
    assert is_cube_effective(cube, M.ISO)
    assert ncube_independent(3, cube.to_ncube(), M.ISO)


def test_cube_from_arrow_pushout_is_effective():
    sq = complete_span(Span(mul(2), mul(3)))
    base = ArrowMorphism.from_square(sq)
    side = ArrowMorphism(base.src_arrow, mul(2), mul(7), mul(7))
    ap = arrow_pushout(base, side)
    cube = Cube(
        a=base.src_arrow, b=base.dst_arrow, c=side.dst_arrow, d=ap.apex_arrow,
        f0=base.bottom, f1=base.top, g0=side.bottom, g1=side.top,
        h0=ap.base_leg.bottom, h1=ap.base_leg.top, f0p=ap.side_leg.bottom, f1p=ap.side_leg.top,
    )
    for cls in (M.MONO, M.PURE):
        assert is_cube_effective(cube, cls)
        assert cube_via_mshriek(cube, cls)


def test_near_miss_fixture_rejected_with_kernel():
    doc = parse_diagram(load_fixture("near_miss_cube"))
    cube = doc.cube("near_miss")
    v = is_cube_effective(cube, M.MONO)
    assert not v
    assert not is_effective(derived_square(cube), M.MONO)
    assert derived_kernel(cube)
    assert not ncube_independent(3, cube.to_ncube(), M.MONO)


def derived_kernel(cube):
    w = is_effective(derived_square(cube), M.MONO).witness
    return w["obstruction"]["kernel"]


def test_valid_cube_fixture_accepted():
    cube = parse_diagram(load_fixture("cube")).cube("valid")
    assert is_cube_effective(cube, M.MONO)


def test_cube_rejects_non_commuting_face():
    cube = identity_cube3()
    edges = {e: getattr(cube, e) for e in ("a", "b", "c", "d", "f0", "f1", "f0p", "f1p", "g0", "g1", "h0", "h1")}
    edges["d"] = mul(2)
    with pytest.raises(NotCommutative):
        Cube(**edges)


def test_dimension_limits():
    x = InstanceGenerator(GeneratorConfig(seed=3)).indep(3, M.MONO)
    with pytest.raises(DimensionError):
        ncube_independent(3, x, M.MONO, max_dim=2)
    with pytest.raises(DimensionError):
        ncube_independent(2, x, M.MONO)


def test_level_one_and_two_delegate():
    assert ncube_independent(1, mul(2), M.MONO)
    assert not ncube_independent(1, mul(2), M.PURE)
    sq = complete_span(Span(mul(2), mul(3)))
    x = square_to_cube(sq)
    assert cube_dim(x) == 2
    assert cube_to_square(x) == sq
    assert ncube_independent(2, x, M.MONO).passed == is_effective(sq, M.MONO).passed


def _gen(seed):
    return InstanceGenerator(GeneratorConfig(seed=seed))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([M.MONO, M.PURE]))
def test_cube_paths_agree(seed, cls):
    cube = _gen(seed).cube(cls)
    a = is_cube_effective(cube, cls).passed
    assert a
    assert ncube_independent(3, cube.to_ncube(), cls).passed == a
    assert cube_via_mshriek(cube, cls) == is_effective(derived_square(cube), cls).passed


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_near_miss_cubes_rejected(seed):
    gen = _gen(seed)
    cube = gen.cube(M.MONO, near_miss=True)
    v = is_cube_effective(cube, M.MONO)
    assert not v and v.witness
    assert not ncube_independent(3, cube.to_ncube(), M.MONO)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from([M.MONO, M.PURE]))
def test_cube_transpose_and_class_monotonicity(seed, cls):
    x = _gen(seed).indep(3, cls)
    assert transpose_cube(transpose_cube(x)) == x
    assert ncube_independent(3, transpose_cube(x), cls)
    assert ncube_independent(3, x, M.ALL)
    assert ncube_independent(3, x, M.MONO)


@settings(max_examples=15)
@given(st.integers(0, 2**32), st.sampled_from([3, 4]))
def test_completion_and_amalgamation_at_level(seed, n):
    x = _gen(seed).indep(n, M.MONO)
    F, G, _, _ = square_parts(x)
    completed = complete_cube_span(F, G)
    assert ncube_independent(n, completed, M.MONO)
    assert amalgamate_cubes(completed, x, M.MONO)


@settings(max_examples=15)
@given(st.integers(0, 2**32))
def test_pasting_completions(seed):
    gen = _gen(seed)
    x = gen.indep(3, M.MONO)
    _, _, _, K = square_parts(x)
    right = complete_cube_span(K, gen.indep_from(2, K.dom, M.MONO))
    assert ncube_independent(3, paste_cubes(x, right), M.MONO)


def test_identity_cube_of_square_is_independent():
    sq = complete_span(Span(mul(2), mul(3)))
    x = identity_cube(square_to_cube(sq))
    assert cube_dim(x) == 3
    assert ncube_independent(3, x, M.ISO)
