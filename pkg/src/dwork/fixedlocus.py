"""Fixed loci of permutation-diagonal automorphisms on the generic member of
the Dwork pencil.

Every element is a monomial matrix whose nonzero entries are roots of unity,
so its eigenvectors are supported on single cycles and have root-of-unity
entries. Roots of unity are carried as rational angles (exp(2 pi i t) <-> t
mod 1); a vector is a map ``index -> angle`` on its support. Eigenbases of an
eigenspace have pairwise disjoint supports, and a commuting element acts on
such a basis again by a monomial matrix, which keeps all joint-eigenspace
computations in the same representation.

Genericity in lambda: membership of a point in X_lambda is decided exactly
(both lambda-coefficients vanish). Root counts and smoothness are decided at
several random rational specializations and must reach consensus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import (
    Cyclotomic,
    MultiPoly,
    binary_form_root_count,
    normalize_angle,
    ternary_form_is_smooth,
)
from .geometry import DworkPencil
from .groups import GroupElement

RVec = Tuple[Tuple[int, Fraction], ...]  # sorted (index, angle) pairs


class FixedLocusError(RuntimeError):
    """A fixed-locus configuration outside what can be certified."""


# ---------------------------------------------------------------------------
# Monomial matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """(A x)_i = exp(2 pi i theta_i) * x_pi(i)."""

    pi: Tuple[int, ...]
    theta: Tuple[Fraction, ...]

    @classmethod
    def of(cls, g: GroupElement) -> "Monomial":
        pi, theta = g.monomial()
        return cls(pi, theta)

    def apply(self, v: RVec) -> RVec:
        inv = {j: i for i, j in enumerate(self.pi)}
        return _rvec({inv[j]: self.theta[inv[j]] + a for j, a in v})

    def is_scalar(self) -> bool:
        return self.pi == tuple(range(len(self.pi))) and len(set(self.theta)) <= 1


def _rvec(d: Dict[int, Fraction]) -> RVec:
    return tuple(sorted((i, normalize_angle(a)) for i, a in d.items()))


def eigenlines(A: Monomial) -> List[Tuple[Fraction, RVec]]:
    """All (eigenvalue angle, eigenvector) pairs; one per line."""
    seen = set()
    out = []
    for start in range(len(A.pi)):
        if start in seen:
            continue
        cyc = [start]
        j = A.pi[start]
        while j != start:
            cyc.append(j)
            j = A.pi[j]
        seen.update(cyc)
        total = sum((A.theta[i] for i in cyc), Fraction(0))
        ell = len(cyc)
        for k in range(ell):
            mu = normalize_angle((total + k) / ell)
            vec = {cyc[0]: Fraction(0)}
            cur = Fraction(0)
            for step in range(ell - 1):
                cur = cur + mu - A.theta[cyc[step]]
                vec[cyc[step + 1]] = cur
            out.append((mu, _rvec(vec)))
    return out


@dataclass(frozen=True)
class Eigenspace:
    eigenvalue: Fraction  # angle
    basis: Tuple[RVec, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def cyclotomic_basis(self, size: int) -> List[List[Cyclotomic]]:
        out = []
        for v in self.basis:
            row = [Cyclotomic.zero() for _ in range(size)]
            for i, a in v:
                row[i] = Cyclotomic.root(a)
            out.append(row)
        return out


def group_eigenlines(lines: Sequence[Tuple[Fraction, RVec]]) -> List[Eigenspace]:
    by_mu: Dict[Fraction, List[RVec]] = {}
    for mu, v in lines:
        by_mu.setdefault(mu, []).append(v)
    return [Eigenspace(mu, tuple(sorted(vs))) for mu, vs in sorted(by_mu.items())]


@dataclass(frozen=True)
class EigenspaceDecomposition:
    element: GroupElement
    spaces: Tuple[Eigenspace, ...]
    all_angles: Tuple[Fraction, ...]  # eigenvalue angle of every eigenline

    def dims(self) -> List[int]:
        return [s.dim for s in self.spaces]


def eigen_decomposition(g: GroupElement) -> EigenspaceDecomposition:
    lines = eigenlines(Monomial.of(g))
    return EigenspaceDecomposition(g, tuple(group_eigenlines(lines)), tuple(sorted(mu for mu, _ in lines)))


def restrict_to_space(c: GroupElement, space: Eigenspace) -> Monomial:
    """Matrix of a commuting element on the basis of ``space``."""
    A = Monomial.of(c)
    support = {frozenset(i for i, _ in v): k for k, v in enumerate(space.basis)}
    pi = [0] * space.dim
    theta = [Fraction(0)] * space.dim
    for k, v in enumerate(space.basis):
        w = A.apply(v)
        kk = support.get(frozenset(i for i, _ in w))
        if kk is None:
            raise FixedLocusError(f"{c} does not preserve the eigenspace")
        target = dict(space.basis[kk])
        ratios = {normalize_angle(a - target[i]) for i, a in w}
        if len(ratios) != 1:
            raise FixedLocusError(f"{c} does not preserve the eigenspace")
        # c v_k = omega v_kk, i.e. row kk of the restricted matrix reads column k
        pi[kk] = k
        theta[kk] = ratios.pop()
    return Monomial(tuple(pi), tuple(theta))


def joint_subspaces(c: GroupElement, space: Eigenspace) -> List[Eigenspace]:
    """Eigenspaces of a commuting element inside ``space`` (in ambient coordinates)."""
    B = restrict_to_space(c, space)
    lines = []
    for mu, y in eigenlines(B):
        vec: Dict[int, Fraction] = {}
        for k, beta in y:
            for i, a in space.basis[k]:
                vec[i] = beta + a
        lines.append((mu, _rvec(vec)))
    return group_eigenlines(lines)


# ---------------------------------------------------------------------------
# Restricting F_lambda
# ---------------------------------------------------------------------------

def restrict_pencil(N: int, basis: Sequence[RVec]) -> MultiPoly:
    """F_lambda restricted to span(basis) for disjointly supported root-of-unity
    vectors: sum_k (sum_i exp(2 pi i N a_ki)) u_k^N - N lambda (...) prod u_k^|S_k|."""
    r = len(basis)
    terms = {}
    for k, v in enumerate(basis):
        coeff = Cyclotomic.zero()
        for _, a in v:
            coeff = coeff + Cyclotomic.root(N * a)
        e = [0] * (r + 1)
        e[k] = N
        terms[tuple(e)] = coeff
    covered = sorted(i for v in basis for i, _ in v)
    if covered == list(range(N)):
        angle = sum((a for v in basis for _, a in v), Fraction(0))
        e = [len(v) for v in basis] + [1]
        terms[tuple(e)] = Cyclotomic.root(angle) * (-N)
    return MultiPoly(r, terms, has_lambda=True)


@lru_cache(maxsize=None)
def point_on_generic_member(N: int, v: RVec) -> bool:
    f = restrict_pencil(N, [v])
    return f.is_zero()


# ---------------------------------------------------------------------------
# Lambda policy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaPolicy:
    """Deterministic random rational specializations avoiding lambda(lambda^N - 1) = 0."""

    seed: int = 0
    samples: int = 3
    bound: int = 97
    max_samples: int = 12

    def values(self, N: int, count: Optional[int] = None) -> List[Fraction]:
        rng = random.Random(self.seed)
        out: List[Fraction] = []
        while len(out) < (count or self.samples):
            lam = Fraction(rng.randint(-self.bound, self.bound), rng.randint(1, self.bound))
            if lam == 0 or lam ** N == 1 or lam in out:
                continue
            out.append(lam)
        return out


def generic_root_count(f: MultiPoly, N: int, policy: LambdaPolicy) -> int:
    """Distinct zeros in P^1 of a binary form in lambda at a generic parameter.

    The count at a special value can only drop, so the maximum over samples is
    taken, and it must be attained by at least ``policy.samples`` of them.
    """
    if f.lambda_degree() == 0:
        return binary_form_root_count(f.lambda_coefficient(0))
    values = policy.values(N, policy.max_samples)
    counts = []
    for lam in values:
        g = f.specialize(lam)
        counts.append(binary_form_root_count(g) if not g.is_zero() else -1)
        best = max(counts)
        if len(counts) >= policy.samples and counts.count(best) >= policy.samples:
            return best
    raise FixedLocusError("root count did not stabilize across lambda specializations")


def generic_smoothness(f: MultiPoly, N: int, policy: LambdaPolicy) -> Tuple[bool, List[str]]:
    """Smoothness of a plane curve at a generic parameter, with the per-sample log.

    Smoothness is an open condition, so a single certified sample proves it
    generically; we still require agreement on ``policy.samples`` values.
    """
    if f.lambda_degree() == 0:
        ok = ternary_form_is_smooth(f.lambda_coefficient(0))
        return ok, ["lambda-free"]
    log = []
    smooth = 0
    for lam in policy.values(N, policy.max_samples):
        ok = ternary_form_is_smooth(f.specialize(lam))
        log.append(f"{lam}:{'smooth' if ok else 'singular'}")
        smooth += ok
        if smooth >= policy.samples:
            return True, log
    return smooth > 0, log


# ---------------------------------------------------------------------------
# Fixed loci
# ---------------------------------------------------------------------------

POINTS, CURVE, LINE = "points", "curve", "line"


@dataclass(frozen=True)
class FixedComponent:
    kind: str  # POINTS, CURVE or LINE
    host: int  # index into the eigenspace decomposition
    count: int = 0  # number of points (POINTS)
    genus: int = 0  # CURVE / LINE
    witness: str = ""

    @property
    def dimension(self) -> int:
        return 0 if self.kind == POINTS else 1

    @property
    def euler(self) -> int:
        return self.count if self.kind == POINTS else 2 - 2 * self.genus

    def label(self) -> str:
        if self.kind == POINTS:
            return f"{self.count} point{'s' if self.count != 1 else ''}"
        if self.kind == LINE:
            return "line"
        return f"curve of genus {self.genus}"


@dataclass
class FixedLocusReport:
    element: GroupElement
    decomposition: EigenspaceDecomposition
    components: Tuple[FixedComponent, ...]

    @property
    def euler(self) -> int:
        return euler_of_fixed_locus(self)

    @property
    def is_free(self) -> bool:
        return not self.components

    def signature(self) -> Tuple:
        """Multiset of (kind, count, genus), independent of eigenspace labels."""
        return tuple(sorted((c.kind, c.count, c.genus) for c in self.components))

    def point_total(self) -> int:
        return sum(c.count for c in self.components if c.kind == POINTS)

    def curves(self) -> List[FixedComponent]:
        return [c for c in self.components if c.kind != POINTS]


def euler_of_fixed_locus(report: FixedLocusReport) -> int:
    return sum(c.euler for c in report.components)


def plane_curve_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def fixed_locus(g: GroupElement, pencil: DworkPencil = None, policy: LambdaPolicy = LambdaPolicy()) -> FixedLocusReport:
    pencil = pencil or DworkPencil(g.n)
    if pencil.n != g.n:
        raise ValueError("element and pencil dimensions differ")
    return _fixed_locus_cached(g, policy)


@lru_cache(maxsize=None)
def _fixed_locus_cached(g: GroupElement, policy: LambdaPolicy) -> FixedLocusReport:
    if g.is_identity():
        raise ValueError("the identity fixes everything")
    N = g.N
    dec = eigen_decomposition(g)
    comps: List[FixedComponent] = []
    for idx, space in enumerate(dec.spaces):
        f = restrict_pencil(N, space.basis)
        if space.dim == 1:
            if f.is_zero():
                comps.append(FixedComponent(POINTS, idx, count=1, witness=_describe_vec(space.basis[0])))
        elif space.dim == 2:
            if f.is_zero():
                comps.append(FixedComponent(LINE, idx, genus=0, witness="restriction vanishes"))
            else:
                k = generic_root_count(f, N, policy)
                if k:
                    comps.append(FixedComponent(POINTS, idx, count=k, witness=repr(f)))
        elif space.dim == 3:
            if f.is_zero():
                raise FixedLocusError(f"{g}: plane contained in X")
            smooth, log = generic_smoothness(f, N, policy)
            if not smooth:
                raise FixedLocusError(f"{g}: genus undetermined (singular plane curve {f!r})")
            comps.append(FixedComponent(CURVE, idx, genus=plane_curve_genus(N), witness=repr(f)))
        else:
            if not f.is_zero():
                raise FixedLocusError(f"{g}: unsupported fixed-surface candidate")
            raise FixedLocusError(f"{g}: linear space of dimension {space.dim - 1} inside X")
    return FixedLocusReport(g, dec, tuple(comps))


def _describe_vec(v: RVec) -> str:
    return "{" + ", ".join(f"x{i + 1}:{a}" for i, a in v) + "}"


# ---------------------------------------------------------------------------
# Action of commuting elements on fixed components
# ---------------------------------------------------------------------------

def fixed_points_on_component(
    c: GroupElement, report: FixedLocusReport, comp: FixedComponent, policy: LambdaPolicy = LambdaPolicy()
) -> Optional[int]:
    """For c commuting with the element of ``report``: number of points of the
    component fixed by c, or None if c fixes the component pointwise."""
    space = report.decomposition.spaces[comp.host]
    N = c.N
    B = restrict_to_space(c, space)
    if B.is_scalar():
        return None if comp.kind != POINTS else comp.count
    total = 0
    for sub in joint_subspaces(c, space):
        if sub.dim == 1:
            total += point_on_generic_member(N, sub.basis[0])
        elif sub.dim == 2:
            f = restrict_pencil(N, sub.basis)
            if f.is_zero():
                raise FixedLocusError(f"{c}: line inside a fixed plane curve")
            total += generic_root_count(f, N, policy)
        else:
            raise FixedLocusError("unexpected joint eigenspace dimension")
    return total


def space_image(c: GroupElement, dec: EigenspaceDecomposition, host: int) -> int:
    """Index of the eigenspace c maps ``dec.spaces[host]`` onto.

    c must normalize the cyclic group of the decomposed element, so it
    permutes its eigenspaces."""
    A = Monomial.of(c)
    w = A.apply(dec.spaces[host].basis[0])
    support = frozenset(i for i, _ in w)
    for j, space in enumerate(dec.spaces):
        for u in space.basis:
            if frozenset(i for i, _ in u) != support:
                continue
            target = dict(u)
            if len({normalize_angle(a - target[i]) for i, a in w}) == 1:
                return j
    raise FixedLocusError(f"{c} does not permute the eigenspaces of {dec.element}")
