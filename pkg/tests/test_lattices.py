import cmath
from math import gcd

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, strategies as st

from dwork.lattices import (
    FERMAT_NS_BASIS,
    H3_COINVARIANT_CLASSES,
    IntegralLattice,
    LatticeError,
    NAMED_ACTIONS,
    QuarticSymmetry,
    S4_COINVARIANT_CLASSES,
    class_of,
    coinvariant_lattice,
    coinvariant_vectors,
    contained_in,
    generate,
    hyperplane_class,
    invariant_lattice,
    line_intersection_matrix,
    line_permutation,
    lines_on_fermat,
    named_action,
    nikulin_embedding_check,
    ns_fermat,
    ns_xlambda,
    spanned_lattice,
    symplectic_symmetries,
    twice_lattice_test,
)


def line_points(line):
    """Numeric spanning vectors from the explicit parametrizations."""
    p = cmath.exp(1j * cmath.pi * (2 * line.a + 1) / 4)
    q = cmath.exp(1j * cmath.pi * (2 * line.b + 1) / 4)
    if line.family == 0:
        return np.array([p, 1, 0, 0]), np.array([0, 0, 1, q])
    if line.family == 1:
        return np.array([1, 0, 0, q]), np.array([0, p, 1, 0])
    return np.array([1, 0, p, 0]), np.array([0, 1, 0, q])


def pair(x, y):
    g = ns_fermat().gram
    return sum(a * g[i][j] * b for i, a in enumerate(x) for j, b in enumerate(y))


def test_48_distinct_lines_on_the_fermat_quartic():
    lines = lines_on_fermat()
    assert len(lines) == 48
    rng = np.random.default_rng(0)
    spans = []
    for line in lines:
        u, w = line_points(line)
        for s, t in rng.normal(size=(3, 2)):
            x = s * u + t * w
            assert abs(np.sum(x ** 4)) < 1e-9
        spans.append(np.array([u, w]))
    for i in range(48):
        for j in range(i):
            assert np.linalg.matrix_rank(np.vstack([spans[i], spans[j]]), tol=1e-9) > 2


def test_incidence_matches_numeric_rank():
    lines = lines_on_fermat()
    gram = line_intersection_matrix()
    for i in range(48):
        for j in range(48):
            if i == j:
                assert gram[i][j] == -2
                continue
            m = np.vstack([*line_points(lines[i]), *line_points(lines[j])])
            meet = np.linalg.matrix_rank(m, tol=1e-9) < 4
            assert gram[i][j] == int(meet)


def test_each_line_meets_fourteen_others():
    # Six in its own family and four in each of the other two.
    assert all(sum(1 for x in row if x == 1) == 14 for row in line_intersection_matrix())


def test_ns_fermat_invariants():
    ns = ns_fermat()
    assert ns.rank == 20
    assert ns.determinant == -64
    assert ns.discriminant_group == [8, 8]
    assert ns.signature == (1, 19)
    assert ns.is_even
    assert ns.labels == tuple(f"l{i}" for i in FERMAT_NS_BASIS)


def test_ns_fermat_against_sympy():
    ns = ns_fermat()
    m = sympy.Matrix(ns.gram)
    assert m.det() == -64
    eig = np.linalg.eigvalsh(np.array(ns.gram, dtype=float))
    assert (sum(eig > 0), sum(eig < 0)) == (1, 19)


def test_every_line_is_integral_in_the_basis():
    g = line_intersection_matrix()
    for k in range(48):
        c = class_of({k + 1: 1})
        for j, i in enumerate(FERMAT_NS_BASIS):
            assert pair(c, class_of({i: 1})) == g[k][i - 1]


def test_hyperplane_class():
    h = hyperplane_class()
    assert pair(h, h) == 4
    assert all(pair(h, class_of({k: 1})) == 1 for k in range(1, 49))


@pytest.mark.parametrize("name", sorted(NAMED_ACTIONS))
def test_generators_permute_lines_and_preserve_the_form(name):
    action = named_action(name)
    gram = np.array(ns_fermat().gram)
    for perm, m in zip(action.permutations, action.matrices):
        assert sorted(perm) == list(range(48))
        m = np.array(m)
        assert (m.T @ gram @ m == gram).all()


def test_identity_acts_trivially():
    e = QuarticSymmetry.make()
    assert line_permutation(e) == tuple(range(48))


@pytest.mark.parametrize("name,order", [("H3", 16), ("S4", 24), ("A4", 12), ("A4perm", 12)])
def test_group_orders(name, order):
    assert len(generate(NAMED_ACTIONS[name])) == order
    assert all(g.is_symplectic() for g in generate(NAMED_ACTIONS[name]))


def test_symplectic_symmetry_group():
    group = symplectic_symmetries()
    assert len(group) == 384
    keys = set(group)
    assert all(a * b in keys for a in group[::17] for b in group[::13])


def test_odd_elements_of_s4_do_not_preserve_the_pencil():
    assert [g.preserves_pencil() for g in NAMED_ACTIONS["S4"]] == [True, True, False]
    assert all(g.preserves_pencil() for g in generate(NAMED_ACTIONS["A4"]))


@pytest.mark.parametrize("name,rank,group", [
    ("H3", 18, [2, 2, 8, 8]),
    ("S4", 17, [4, 12, 12]),
    ("A4", 16, [2, 2, 12, 12]),
    ("A4perm", 16, [2, 2, 12, 12]),
])
def test_coinvariant_lattices(name, rank, group):
    action = named_action(name)
    omega = coinvariant_lattice(action)
    assert omega.rank == rank
    assert omega.discriminant_group == group
    assert omega.signature == (0, rank)
    assert omega.is_even
    assert invariant_lattice(action).rank + omega.rank == 20


@pytest.mark.parametrize("name,classes", [
    ("H3", H3_COINVARIANT_CLASSES),
    ("S4", S4_COINVARIANT_CLASSES),
    ("A4", S4_COINVARIANT_CLASSES[:16]),
])
def test_listed_classes_span_the_coinvariant_lattice(name, classes):
    omega = coinvariant_lattice(named_action(name))
    span = spanned_lattice(classes)
    assert span.rank == omega.rank
    assert span.determinant == omega.determinant
    assert contained_in([class_of(c) for c in classes], coinvariant_vectors(named_action(name)))


def test_a4_coinvariants_inside_s4_coinvariants():
    inner = coinvariant_vectors(named_action("A4"))
    outer = coinvariant_vectors(named_action("S4"))
    assert contained_in(inner, outer)
    assert not contained_in(outer, inner)


def test_ns_xlambda():
    x = ns_xlambda()
    assert x.ns.rank == 19
    assert x.ns.discriminant_group == [4, 8, 8]
    assert x.ns.signature == (1, 18)
    assert x.h_plus_omega.determinant // x.ns.determinant == 4
    assert x.index == 2
    assert pair(x.v, x.v) == -4
    assert all(pair(x.v, n) == 0 for n in x.n_vectors)


def test_transcendental_lattice_of_x_lambda():
    t = ns_xlambda().transcendental
    assert t.signature == (2, 1)
    assert abs(t.determinant) == abs(ns_xlambda().ns.determinant) == 256
    assert t.discriminant_group == [4, 8, 8]


@pytest.mark.parametrize("rank,length,ok", [(19, 1, True), (19, 3, False), (18, 2, True), (17, 3, True), (17, 4, False)])
def test_nikulin_embedding_check(rank, length, ok):
    assert nikulin_embedding_check(rank, length) is ok


def test_fermat_transcendental_lattice_is_halvable():
    rep = twice_lattice_test(IntegralLattice(("a", "b"), ((8, 0), (0, 8))))
    assert rep.halvable
    assert rep.L.gram == ((4, 0), (0, 4))


def test_x_lambda_is_kummer():
    rep = twice_lattice_test(ns_xlambda().transcendental)
    assert rep.twice and rep.even and rep.halvable
    assert rep.L.gram == ((4, 0, 0), (0, 4, 0), (0, 0, -2))


def test_twice_but_odd_is_not_halvable():
    rep = twice_lattice_test(IntegralLattice(("a", "b"), ((2, 0), (0, 6))))
    assert rep.twice and not rep.even and not rep.halvable


def test_halving_requires_full_length():
    with pytest.raises(LatticeError):
        twice_lattice_test(IntegralLattice(("a", "b"), ((2, 1), (1, 2))))


@st.composite
def scaled_grams(draw):
    r = draw(st.integers(1, 3))
    p = draw(st.sampled_from([2, 3, 4, 6, 8]))
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            m[i][j] = m[j][i] = draw(st.integers(-4, 4))
    assume(sympy.Matrix(m).det() != 0)
    return tuple(tuple(p * x for x in row) for row in m)


@given(scaled_grams())
def test_halving_matches_entrywise_criterion(gram):
    # T = L(2) iff every entry is even; L is even iff the diagonal is 0 mod 4.
    T = IntegralLattice(tuple(f"e{i}" for i in range(len(gram))), gram)
    rep = twice_lattice_test(T)
    twice = all(x % 2 == 0 for row in gram for x in row)
    assert rep.twice == twice
    assert rep.halvable == (twice and all(gram[i][i] % 4 == 0 for i in range(len(gram))))


@pytest.mark.parametrize("a,b", [(a, b) for a in range(2, 13) for b in range(a, 13) if gcd(a, b) > 1])
def test_small_diagonal_lattices(a, b):
    rep = twice_lattice_test(IntegralLattice(("x", "y"), ((a, 0), (0, b))))
    assert rep.halvable == (a % 4 == 0 and b % 4 == 0)


def test_dual_generators():
    ns = ns_fermat()
    gens = ns.dual_generators()
    assert [order for order, _ in gens] == [8, 8]
    for order, vec in gens:
        assert all((order * c).denominator == 1 for c in vec)
        for j in range(ns.rank):
            assert ns.pairing(vec, [int(i == j) for i in range(ns.rank)]).denominator == 1
    form = ns.discriminant_form()
    assert all(0 <= form[i][i] < 2 and (8 * form[i][i]).denominator == 1 for i in range(2))
