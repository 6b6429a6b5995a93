"""Orbifold Hodge numbers of quotients of the quintic threefold X_lambda.

The untwisted sector is the G-invariant cohomology of X, obtained from the
Lefschetz fixed point formula (requires h^{1,1}(X) = 1). Each nontrivial
conjugacy class s contributes, for every component F of the fixed locus of
s, the cohomology of F / C_s shifted by (age, age), with C_s the centralizer.
Components permuted by C_s are counted once per orbit and divided by their
stabilizer K. Point components contribute their number of K-orbits; curve
components contribute the genus of C / K, obtained from the orbifold Euler
characteristic chi(C / K) = (1/|K|) sum_k chi(C^k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .fixedlocus import (
    POINTS,
    FixedComponent,
    FixedLocusError,
    FixedLocusReport,
    LambdaPolicy,
    fixed_locus,
    fixed_points_on_component,
    space_image,
)
from .geometry import HypersurfaceClass, euler_characteristic
from .groups import GroupElement, Subgroup, centralizer, conjugacy_classes
from .arith import normalize_angle

QUINTIC_EULER = euler_characteristic(HypersurfaceClass(3, 5))


class SectorError(RuntimeError):
    """A twisted sector that could not be resolved."""


# ---------------------------------------------------------------------------
# Ages
# ---------------------------------------------------------------------------

def tangent_angles(report: FixedLocusReport, comp: FixedComponent) -> List[Fraction]:
    """Eigenvalue angles of the element on T_P X at a point P of ``comp``.

    T_P P^n = Hom(L, C^N / L) has angles beta - alpha over the other
    eigenlines (alpha the host eigenvalue). Since F(gx) = F(x), dF_P is an
    eigen-covector and the normal direction of X has angle -N*alpha; it is
    removed once.
    """
    dec = report.decomposition
    N = report.element.N
    alpha = dec.spaces[comp.host].eigenvalue
    angles = list(dec.all_angles)
    angles.remove(alpha)
    rel = [normalize_angle(b - alpha) for b in angles]
    normal = normalize_angle(-N * alpha)
    if normal not in rel:
        raise SectorError(f"{report.element}: normal eigenvalue not found at {comp.label()}")
    rel.remove(normal)
    return sorted(rel)


def age(report: FixedLocusReport, comp: FixedComponent) -> Fraction:
    rel = tangent_angles(report, comp)
    zeros = sum(1 for a in rel if a == 0)
    if zeros != comp.dimension:
        raise SectorError(
            f"{report.element}: {zeros} invariant tangent directions on a component of dimension {comp.dimension}"
        )
    return sum(rel, Fraction(0))


def codimension(report: FixedLocusReport, comp: FixedComponent) -> int:
    return (report.element.n - 1) - comp.dimension


def matching_component(report: FixedLocusReport, other: FixedLocusReport, comp: FixedComponent) -> FixedComponent:
    """The component of ``other`` (the fixed locus of a power with the same
    eigenspaces) sitting in the same eigenspace as ``comp``."""
    basis = report.decomposition.spaces[comp.host].basis
    for c in other.components:
        if other.decomposition.spaces[c.host].basis == basis and c.kind == comp.kind:
            return c
    raise SectorError("no matching component")


# ---------------------------------------------------------------------------
# Invariant cohomology and the prime-order formula
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantCohomology:
    p11: int
    p12: int
    euler_sum: int  # sum over g in G of chi(X^g)


def class_euler_data(G: Subgroup, policy: LambdaPolicy = LambdaPolicy()) -> List[Tuple[GroupElement, int, int]]:
    """(representative, class size, chi(X^g)) per conjugacy class."""
    out = []
    for cls in conjugacy_classes(G):
        g = cls.representative
        chi = QUINTIC_EULER if g.is_identity() else fixed_locus(g, policy=policy).euler
        out.append((g, cls.size, chi))
    return out


def invariant_h12(G: Subgroup, euler_data: Sequence[Tuple[GroupElement, int, int]] = None,
                  policy: LambdaPolicy = LambdaPolicy()) -> InvariantCohomology:
    if G.n != 4:
        raise ValueError("invariant cohomology is implemented for the quintic threefold only")
    data = euler_data if euler_data is not None else class_euler_data(G, policy)
    total = sum(size * chi for _, size, chi in data)
    p12 = 1 - Fraction(total, 2 * G.order)
    if p12.denominator != 1 or p12 < 0:
        raise SectorError(f"non-integral invariant h^(1,2) = {p12}")
    return InvariantCohomology(p11=1, p12=int(p12), euler_sum=total)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def prime_order_quotient(p: int, points: int, curves: int, genera: Sequence[int],
                         chi_z: int = QUINTIC_EULER) -> Tuple[int, int]:
    """(h11, h12) of a crepant resolution of X / (Z/p) from the fixed data of
    one generator (all nontrivial powers share the fixed locus)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if len(genera) != curves:
        raise ValueError("one genus per curve expected")
    sg = sum(genera)
    h11 = Fraction(1) + Fraction((p - 1) * points, 2) + (p - 1) * curves
    h12 = 1 - Fraction(chi_z + (p - 1) * (points + 2 * curves - 2 * sg), 2 * p) + (p - 1) * sg
    if h11.denominator != 1 or h12.denominator != 1:
        raise SectorError("non-integral prime-order Hodge numbers")
    return int(h11), int(h12)


# ---------------------------------------------------------------------------
# Quotients of fixed components by centralizers
# ---------------------------------------------------------------------------

def quotient_curve_genus(genus: int, fixed_counts: Sequence[Optional[int]]) -> int:
    """Genus of C / K given, for each k in K, the number of fixed points of k
    on C (None when k fixes C pointwise, the identity included)."""
    chi = 2 - 2 * genus
    total = sum(chi if f is None else f for f in fixed_counts)
    q = Fraction(total, len(fixed_counts))
    g2 = (2 - q) / 2
    if g2.denominator != 1 or g2 < 0:
        raise SectorError(f"Riemann-Hurwitz gives a non-integral genus {g2}")
    return int(g2)


def point_orbit_count(fixed_counts: Sequence[int]) -> int:
    """Burnside: number of orbits from the fixed-point counts of each group element."""
    q = Fraction(sum(fixed_counts), len(fixed_counts))
    if q.denominator != 1:
        raise SectorError("non-integral orbit count")
    return int(q)


@dataclass(frozen=True)
class QuotientComponent:
    kind: str
    age: int
    quotient_points: int = 0  # orbits, for point components
    quotient_genus: int = 0  # for curves
    source: str = ""


def component_quotient(report: FixedLocusReport, comp: FixedComponent, stabilizer: Sequence[GroupElement],
                       policy: LambdaPolicy = LambdaPolicy()) -> QuotientComponent:
    counts = [fixed_points_on_component(c, report, comp, policy) for c in stabilizer]
    a = age(report, comp)
    if a.denominator != 1:
        raise SectorError(f"non-integral age {a}")
    if comp.kind == POINTS:
        if any(x is None for x in counts):
            raise SectorError("point component reported as pointwise fixed")
        return QuotientComponent(POINTS, int(a), quotient_points=point_orbit_count(counts), source=comp.label())
    return QuotientComponent(comp.kind, int(a), quotient_genus=quotient_curve_genus(comp.genus, counts),
                             source=comp.label())


# ---------------------------------------------------------------------------
# Chen-Ruan assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sector:
    representative: GroupElement
    class_size: int
    centralizer_order: int
    component: str
    age: int
    shift: Tuple[int, int]
    contribution: Dict[str, int]


@dataclass
class OrbifoldHodge:
    group_order: int
    grid: Tuple[Tuple[int, ...], ...]  # grid[p][q]
    invariant: InvariantCohomology
    sectors: List[Sector] = field(default_factory=list)

    @property
    def h11(self) -> int:
        return self.grid[1][1]

    @property
    def h21(self) -> int:
        return self.grid[2][1]

    @property
    def h12(self) -> int:
        return self.grid[1][2]

    def pair(self) -> Tuple[int, int]:
        return self.h11, self.h21

    def euler(self) -> int:
        return sum((-1) ** (p + q) * self.grid[p][q] for p in range(4) for q in range(4))


def chen_ruan(G: Subgroup, policy: LambdaPolicy = LambdaPolicy()) -> OrbifoldHodge:
    if G.n != 4:
        raise ValueError("orbifold Hodge numbers are implemented for the quintic threefold only")
    bad = [g for g in G.generators if not g.is_even()]
    if bad:
        raise ValueError(f"generator {bad[0]} does not preserve the holomorphic 3-form")
    classes = conjugacy_classes(G)
    euler_data = []
    sectors: List[Sector] = []
    grid = [[0] * 4 for _ in range(4)]
    failures = []
    for cls in classes:
        s = cls.representative
        if s.is_identity():
            euler_data.append((s, 1, QUINTIC_EULER))
            continue
        try:
            report = fixed_locus(s, policy=policy)
            euler_data.append((s, cls.size, report.euler))
            if report.is_free:
                continue
            cent = centralizer(s, G).elements
            done = set()
            for comp in report.components:
                if comp.host in done:
                    continue
                images = [space_image(h, report.decomposition, comp.host) for h in cent]
                done.update(images)
                stabilizer = [h for h, j in zip(cent, images) if j == comp.host]
                q = component_quotient(report, comp, stabilizer, policy)
                a = q.age
                contrib: Dict[str, int] = {}
                if q.kind == POINTS:
                    grid[a][a] += q.quotient_points
                    contrib[f"h{a}{a}"] = q.quotient_points
                else:
                    grid[a][a] += 1
                    grid[a + 1][a + 1] += 1
                    grid[a + 1][a] += q.quotient_genus
                    grid[a][a + 1] += q.quotient_genus
                    contrib = {f"h{a}{a}": 1, f"h{a + 1}{a + 1}": 1,
                               f"h{a + 1}{a}": q.quotient_genus, f"h{a}{a + 1}": q.quotient_genus}
                label = q.source if q.kind == POINTS else f"{q.source} -> genus {q.quotient_genus}"
                if q.kind == POINTS:
                    label += f" -> {q.quotient_points} orbit{'s' if q.quotient_points != 1 else ''}"
                orbit = len(set(images))
                if orbit > 1:
                    label += f" (orbit of {orbit} components)"
                sectors.append(Sector(s, cls.size, len(cent), label, a, (a, a),
                                      {k: v for k, v in contrib.items() if v}))
        except (FixedLocusError, SectorError) as exc:
            failures.append(f"{s}: {exc}")
    if failures:
        raise SectorError("unresolved sectors: " + "; ".join(failures))
    inv = invariant_h12(G, euler_data)
    grid[0][0] += 1
    grid[3][3] += 1
    grid[3][0] += 1
    grid[0][3] += 1
    grid[1][1] += inv.p11
    grid[2][2] += inv.p11
    grid[2][1] += inv.p12
    grid[1][2] += inv.p12
    return OrbifoldHodge(G.order, tuple(tuple(r) for r in grid), inv, sectors)
