from itertools import product

import pytest
from hypothesis import given, strategies as st

from dwork.geometry import (
    DworkPencil,
    HypersurfaceClass,
    bounded_monomial_count,
    euler_characteristic,
    hodge_diamond,
    jacobian_ring_dimension,
    middle_betti,
    moduli_dimension,
    node_indices,
    singular_fibers,
    singular_points_by_scan,
)


def brute_force_jacobian(m, d, p):
    """Monomials of the Fermat Jacobian ring (exponents <= d-2) in the grade
    computing the primitive h^(m-p,p)."""
    grade = d * (p + 1) - (m + 2)
    if grade < 0:
        return 0
    return sum(1 for e in product(range(d - 1), repeat=m + 2) if sum(e) == grade)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("d", range(1, 8))
def test_jacobian_count_matches_enumeration(m, d):
    if (d - 1) ** (m + 2) > 300000:
        pytest.skip("enumeration too large")
    cls = HypersurfaceClass(m, d)
    for p in range(m + 1):
        assert jacobian_ring_dimension(cls, p) == brute_force_jacobian(m, d, p)


@pytest.mark.parametrize("m,d", [(m, d) for m in range(1, 6) for d in range(1, 8)])
def test_hodge_numbers_sum_to_euler_characteristic(m, d):
    diamond = hodge_diamond(HypersurfaceClass(m, d))
    alt = sum((-1) ** (p + q) * diamond.h(p, q) for p in range(m + 1) for q in range(m + 1))
    assert alt == euler_characteristic(HypersurfaceClass(m, d))
    assert diamond.betti(m) == middle_betti(HypersurfaceClass(m, d))


@pytest.mark.parametrize("m,d,e", [(2, 4, 24), (3, 5, -200), (4, 6, 2610), (1, 3, 0), (1, 4, -4)])
def test_euler_characteristics(m, d, e):
    assert euler_characteristic(HypersurfaceClass(m, d)) == e


@pytest.mark.parametrize("m,d,row", [
    (2, 4, [1, 20, 1]),
    (3, 5, [1, 101, 101, 1]),
    (4, 6, [1, 426, 1752, 426, 1]),
    (1, 3, [1, 1]),
])
def test_middle_rows(m, d, row):
    assert hodge_diamond(HypersurfaceClass(m, d)).middle_row() == row


@pytest.mark.parametrize("m,d", [(2, 4), (3, 5), (4, 6)])
def test_calabi_yau_shape(m, d):
    diamond = hodge_diamond(HypersurfaceClass(m, d))
    assert diamond.h(m, 0) == 1
    assert all(diamond.h(p, 0) == 0 for p in range(1, m))
    # h^(m-1,1) is primitive except for surfaces, where the hyperplane class adds one
    assert diamond.h(m - 1, 1) - (1 if m == 2 else 0) == moduli_dimension(m)


@given(st.integers(1, 6), st.integers(0, 20), st.integers(0, 5))
def test_bounded_monomial_count(nvars, degree, bound):
    brute = sum(1 for e in product(range(bound + 1), repeat=nvars) if sum(e) == degree)
    assert bounded_monomial_count(nvars, degree, bound) == brute


def test_pencil_polynomial():
    f = DworkPencil(3).polynomial()
    assert f.lambda_degree() == 1
    assert f.total_degree() == 4


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_singular_fiber_counts(n):
    rep = singular_fibers(n)
    assert len(rep.fiber_exponents) == n + 1
    assert rep.nodes_per_fiber == (n + 1) ** (n - 1)
    assert all(len(node_indices(n, r)) == rep.nodes_per_fiber for r in range(n + 1))


@pytest.mark.parametrize("n", [2, 3])
def test_nodes_match_gradient_scan(n):
    rep = singular_fibers(n, enumerate_nodes=True)
    for r in range(n + 1):
        assert sorted(rep.nodes[r]) == sorted(singular_points_by_scan(n, r))
