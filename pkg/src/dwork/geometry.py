"""The Dwork pencil and Hodge numbers of smooth projective hypersurfaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Dict, List, Optional, Tuple

from .arith import Cyclotomic, MultiPoly


@dataclass(frozen=True)
class DworkPencil:
    """F_lambda = sum x_i^(n+1) - (n+1) * lambda * prod x_i in P^n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("the pencil needs n >= 2")

    @property
    def degree(self) -> int:
        return self.n + 1

    @property
    def nvars(self) -> int:
        return self.n + 1

    def polynomial(self) -> MultiPoly:
        d = self.degree
        terms = {}
        for i in range(self.nvars):
            e = [0] * (self.nvars + 1)
            e[i] = d
            terms[tuple(e)] = 1
        terms[(1,) * self.nvars + (1,)] = -d
        return MultiPoly(self.nvars, terms, has_lambda=True)


@dataclass(frozen=True)
class HypersurfaceClass:
    """Smooth hypersurface of degree d and dimension m in P^(m+1)."""

    m: int
    d: int

    def __post_init__(self):
        if self.m < 1 or self.d < 1:
            raise ValueError("need m >= 1 and d >= 1")

    def grade(self, p: int) -> int:
        """Jacobian-ring degree computing the primitive h^(m-p,p)."""
        return self.d * (p + 1) - (self.m + 2)


def euler_characteristic(cls: HypersurfaceClass) -> int:
    m, d = cls.m, cls.d
    return sum((-1) ** k * d ** (k + 1) * comb(m + 2, m - k) for k in range(m + 1))


def middle_betti(cls: HypersurfaceClass) -> int:
    e = euler_characteristic(cls)
    return (cls.m + 1) - e if cls.m % 2 else e - cls.m


def bounded_monomial_count(nvars: int, degree: int, bound: int) -> int:
    """Monomials of the given degree in nvars variables, every exponent <= bound."""
    if degree < 0:
        return 0
    step = bound + 1
    return sum(
        (-1) ** j * comb(nvars, j) * comb(degree - j * step + nvars - 1, nvars - 1)
        for j in range(nvars + 1)
        if degree - j * step >= 0
    )


def jacobian_ring_dimension(cls: HypersurfaceClass, p: int) -> int:
    """dim of the Fermat Jacobian ring in grade d(p+1)-(m+2)."""
    return bounded_monomial_count(cls.m + 2, cls.grade(p), cls.d - 2)


@dataclass(frozen=True)
class HodgeDiamond:
    m: int
    table: Tuple[Tuple[int, ...], ...]  # table[p][q] = h^{p,q}
    euler: int

    def h(self, p: int, q: int) -> int:
        if 0 <= p <= self.m and 0 <= q <= self.m:
            return self.table[p][q]
        return 0

    def betti(self, k: int) -> int:
        return sum(self.h(p, k - p) for p in range(k + 1))

    def middle_row(self) -> List[int]:
        return [self.h(p, self.m - p) for p in range(self.m, -1, -1)]

    def as_dict(self) -> Dict[str, int]:
        return {f"h{p}{q}": self.table[p][q] for p in range(self.m + 1) for q in range(self.m + 1)}

    def rows(self) -> List[List[int]]:
        """Diamond rows from h^{0,0} upwards: row k lists h^{p,k-p} for p = k..0."""
        return [[self.h(p, k - p) for p in range(k, -1, -1) if k - p <= self.m and p <= self.m]
                for k in range(2 * self.m + 1)]


def hodge_diamond(cls: HypersurfaceClass) -> HodgeDiamond:
    m = cls.m
    t = [[0] * (m + 1) for _ in range(m + 1)]
    for p in range(m + 1):
        if 2 * p != m:
            t[p][p] = 1
    for p in range(m + 1):
        q = m - p
        # primitive part of h^{p,q} from grade d(q+1)-(m+2); symmetric in p <-> q
        val = jacobian_ring_dimension(cls, q)
        if 2 * p == m:
            val += 1
        t[p][q] = val
    return HodgeDiamond(m=m, table=tuple(tuple(r) for r in t), euler=euler_characteristic(cls))


def moduli_dimension(m: int) -> int:
    """Degree-(m+2) forms in m+2 variables modulo GL(m+2)."""
    return comb(2 * m + 3, m + 2) - (m + 2) ** 2


@dataclass(frozen=True)
class SingularFiberReport:
    n: int
    fiber_exponents: Tuple[int, ...]  # lambda = xi_(n+1)^r
    nodes_per_fiber: int
    rule: str
    nodes: Optional[Dict[int, Tuple[Tuple[int, ...], ...]]] = field(default=None)


def node_indices(n: int, r: int) -> List[Tuple[int, ...]]:
    """Index vectors (i_1..i_n) with sum i_j = -r mod (n+1); the node is
    (xi^i_1 : ... : xi^i_n : 1) on the fiber lambda = xi^r."""
    N = n + 1
    return [idx for idx in product(range(N), repeat=n) if (sum(idx) + r) % N == 0]


def singular_fibers(n: int, enumerate_nodes: bool = False) -> SingularFiberReport:
    if n < 2:
        raise ValueError("n >= 2 required")
    N = n + 1
    nodes = None
    if enumerate_nodes:
        if n > 4:
            raise ValueError("node listing is limited to n <= 4")
        nodes = {r: tuple(node_indices(n, r)) for r in range(N)}
    return SingularFiberReport(
        n=n,
        fiber_exponents=tuple(range(N)),
        nodes_per_fiber=N ** (n - 1),
        rule=f"sum of index vector = -r mod {N}",
        nodes=nodes,
    )


def singular_points_by_scan(n: int, r: int) -> List[Tuple[int, ...]]:
    """Brute force: index vectors whose root-of-unity point is singular on the
    fiber lambda = xi^r, checked by exact evaluation of F and its gradient."""
    N = n + 1
    f = DworkPencil(n).polynomial().specialize(Cyclotomic.xi(N, r))
    grads = [f.derivative(i) for i in range(N)]
    found = []
    for idx in product(range(N), repeat=n):
        pt = [Cyclotomic.xi(N, i) for i in idx] + [Cyclotomic.one()]
        if all(g.evaluate(pt).is_zero() for g in grads + [f]):
            found.append(idx)
    return found
