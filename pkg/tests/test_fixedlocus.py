import pytest
from hypothesis import given, settings, strategies as st

from dwork.fixedlocus import (
    CURVE,
    LINE,
    FixedLocusError,
    LambdaPolicy,
    eigen_decomposition,
    fixed_locus,
    plane_curve_genus,
    space_image,
)
from dwork.groups import GroupElement, conjugate, named_group, parse_element
from oracles import element_matrix, fixed_locus_euler

SEEDS = [0, 1, 2]


def fix(text, seed=0):
    return fixed_locus(parse_element(text, 4), policy=LambdaPolicy(seed))


@pytest.mark.parametrize("seed", SEEDS)
def test_double_transposition_fixes_genus_six_curve_and_line(seed):
    rep = fix("(12)(34)", seed)
    assert rep.signature() == ((CURVE, 0, 6), (LINE, 0, 0))
    assert rep.euler == -8


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("text", ["h(0,0,1,1,3)", "h(0,1,1,3,0)", "h(0,4,4,1,1)"])
def test_three_nontrivial_exponents_fix_ten_points(text, seed):
    assert fix(text, seed).point_total() == 10


@pytest.mark.parametrize("seed", SEEDS)
def test_order_fifteen_element_fixes_two_points(seed):
    rep = fix("(123)h(0,0,0,1,4)", seed)
    assert rep.point_total() == 2 and not rep.curves()


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("text", ["(12345)", "h(0,1,2,3,4)"])
def test_free_actions(text, seed):
    assert fix(text, seed).is_free


@pytest.mark.parametrize("seed", SEEDS)
def test_two_nontrivial_exponents_fix_a_plane_quintic(seed):
    rep = fix("h(1,4,0,0,0)", seed)
    assert rep.signature() == ((CURVE, 0, 6),)


def test_plane_curve_genus():
    assert [plane_curve_genus(d) for d in range(1, 6)] == [0, 0, 1, 3, 6]


def test_odd_element_fixing_a_surface_is_unsupported():
    with pytest.raises(FixedLocusError):
        fix("(45)")


def test_identity_rejected():
    with pytest.raises(ValueError):
        fixed_locus(GroupElement.identity(4))


@st.composite
def elements(draw, even=False):
    perm = draw(st.permutations(range(5)))
    if even and not GroupElement.make(4, perm).is_even():
        perm[0], perm[1] = perm[1], perm[0]
    twist = draw(st.lists(st.integers(0, 4), min_size=4, max_size=4))
    twist.append(-sum(twist) % 5)
    return GroupElement.make(4, perm, twist)


@settings(max_examples=200)
@given(elements(even=True), elements())
def test_fixed_locus_is_conjugation_invariant(g, h):
    if g.is_identity():
        return
    assert fixed_locus(g).signature() == fixed_locus(conjugate(g, h)).signature()


@settings(max_examples=60)
@given(elements(even=True))
def test_euler_matches_numeric_oracle(g):
    if g.is_identity():
        return
    assert fixed_locus(g).euler == fixed_locus_euler([element_matrix(g)])


@pytest.mark.parametrize("name", ["A5", "G1", "Z15", "D5a"])
def test_euler_matches_numeric_oracle_on_named_groups(name):
    for g in named_group(name).elements:
        if not g.is_identity():
            assert fixed_locus(g).euler == fixed_locus_euler([element_matrix(g)])


def test_eigenspaces_of_commuting_elements_are_permuted():
    s = parse_element("(12)(34)", 4)
    dec = eigen_decomposition(s)
    for h in named_group("V4").elements:
        images = {space_image(h, dec, i) for i in range(len(dec.spaces))}
        assert images == set(range(len(dec.spaces)))


def test_space_image_rejects_non_commuting_element():
    s = parse_element("(12)(34)", 4)
    dec = eigen_decomposition(s)
    with pytest.raises(FixedLocusError):
        for i in range(len(dec.spaces)):
            space_image(parse_element("(123)", 4), dec, i)
