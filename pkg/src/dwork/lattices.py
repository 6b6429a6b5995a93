"""Neron-Severi lattices of the quartic K3 surfaces X_lambda.

The Fermat quartic F = X_0 contains 48 lines, all defined over Q(xi_8). A
20-line subset is a Z-basis of NS(F); every other line is expressed in it by
solving against the intersection matrix. Projective symmetries of F permute
the lines, which gives their integral action on NS(F), and from there the
invariant and coinvariant lattices of symmetry groups. NS(X_lambda) is the
saturation of Z h + Omega_H inside NS(F), with H the diagonal group H_3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import Cyclotomic
from .intmat import (
    determinant,
    integer_kernel,
    matmul,
    rational_solve,
    signature,
    smith_normal_form,
    transpose,
)

K3_LATTICE_RANK = 22
FERMAT_NS_BASIS = (1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 17, 18, 19, 21, 22, 23, 33, 34, 35, 37)


class LatticeError(RuntimeError):
    """An inconsistency in a lattice construction."""


# ---------------------------------------------------------------------------
# Lines on the Fermat quartic
# ---------------------------------------------------------------------------

def _root8(k: int) -> Cyclotomic:
    return Cyclotomic.xi(8, k).lift(8)


_ZERO = Cyclotomic(8, [0])
_ONE = Cyclotomic(8, [1])

Vector = Tuple[Cyclotomic, ...]


@dataclass(frozen=True)
class FermatLine:
    """The line {s u + t w} on x1^4 + x2^4 + x3^4 + x4^4 = 0 (1-based index)."""

    index: int
    family: int
    a: int
    b: int
    u: Vector = field(compare=False)
    w: Vector = field(compare=False)

    def label(self) -> str:
        return f"l{self.index}"


def _make_line(family: int, a: int, b: int) -> FermatLine:
    p, q = _root8(2 * a + 1), _root8(2 * b + 1)
    if family == 0:  # (p s : s : t : q t)
        u, w = (p, _ONE, _ZERO, _ZERO), (_ZERO, _ZERO, _ONE, q)
    elif family == 1:  # (s : p t : t : q s)
        u, w = (_ONE, _ZERO, _ZERO, q), (_ZERO, p, _ONE, _ZERO)
    else:  # (s : t : p s : q t)
        u, w = (_ONE, _ZERO, p, _ZERO), (_ZERO, _ONE, _ZERO, q)
    return FermatLine(16 * family + 4 * a + b, family, a, b, u, w)


def restriction_coefficients(u: Vector, w: Vector) -> List[Cyclotomic]:
    """Coefficients of s^k t^(4-k), k = 0..4, in F(s u + t w)."""
    out = []
    for k in range(5):
        total = _ZERO
        for ui, wi in zip(u, w):
            total = total + ui ** k * wi ** (4 - k)
        out.append(total * comb(4, k))
    return out


@lru_cache(maxsize=None)
def lines_on_fermat() -> Tuple[FermatLine, ...]:
    lines = tuple(_make_line(f, a, b) for f in range(3) for a in range(4) for b in range(1, 5))
    for line in lines:
        if not all(c.is_zero() for c in restriction_coefficients(line.u, line.w)):
            raise LatticeError(f"{line.label()} does not lie on the Fermat quartic")
    return lines


def _det4(rows: Sequence[Vector]) -> Cyclotomic:
    total = _ZERO
    for perm in permutations(range(4)):
        term = _ONE
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if term.is_zero():
                break
        else:
            inv = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
            total = total - term if inv % 2 else total + term
    return total


def lines_meet(l1: FermatLine, l2: FermatLine) -> bool:
    """Distinct lines in P^3 meet iff their four spanning vectors are dependent."""
    return _det4((l1.u, l1.w, l2.u, l2.w)).is_zero()


@lru_cache(maxsize=None)
def line_intersection_matrix() -> Tuple[Tuple[int, ...], ...]:
    """48 x 48 intersection numbers; lines are smooth rational curves (-2)."""
    lines = lines_on_fermat()
    n = len(lines)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = -2
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = int(lines_meet(lines[i], lines[j]))
    return tuple(tuple(r) for r in m)


def _plucker_key(u: Vector, w: Vector) -> Tuple:
    coords = [u[i] * w[j] - u[j] * w[i] for i in range(4) for j in range(i + 1, 4)]
    lead = next(c for c in coords if not c.is_zero())
    inv = lead.inverse()
    return tuple((c * inv).lift(8).coeffs for c in coords)


@lru_cache(maxsize=None)
def _line_lookup() -> Dict[Tuple, int]:
    return {_plucker_key(l.u, l.w): k for k, l in enumerate(lines_on_fermat())}


# ---------------------------------------------------------------------------
# Integral lattices
# ---------------------------------------------------------------------------

@dataclass
class IntegralLattice:
    labels: Tuple[str, ...]
    gram: Tuple[Tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        g = self.gram
        if any(len(r) != len(g) for r in g) or any(g[i][j] != g[j][i] for i in range(len(g)) for j in range(len(g))):
            raise LatticeError("Gram matrix is not square and symmetric")
        if len(self.labels) != len(g):
            raise LatticeError("one label per basis vector expected")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def determinant(self) -> int:
        return determinant(self.gram)

    @property
    def signature(self) -> Tuple[int, int]:
        return signature(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def discriminant_group(self) -> List[int]:
        """Invariant factors different from 1 (the group is their direct sum)."""
        return smith_normal_form(self.gram).invariant_factors

    @property
    def length(self) -> int:
        return len(self.discriminant_group)

    def dual_generators(self) -> List[Tuple[int, List[Fraction]]]:
        """(order, coordinates) of generators of L^dual / L in the basis of L.

        With U G V = D, the dual lattice is V D^-1 Z^r, so column i of V
        divided by d_i generates the cyclic factor of order d_i."""
        snf = smith_normal_form(self.gram)
        out = []
        for i, d in enumerate(snf.diagonal):
            if d in (0, 1):
                continue
            out.append((d, [Fraction(snf.V[r][i], d) for r in range(self.rank)]))
        return out

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((Fraction(a) * g * b for a, row in zip(x, self.gram) for g, b in zip(row, y)), Fraction(0))

    def discriminant_form(self) -> List[List[Fraction]]:
        """Values of the form on the computed dual generators: diagonal mod 2,
        off-diagonal mod 1. These depend on the choice of generators."""
        gens = [v for _, v in self.dual_generators()]
        out = []
        for i, x in enumerate(gens):
            row = []
            for j, y in enumerate(gens):
                val = self.pairing(x, y)
                mod = 2 if i == j else 1
                row.append(val - mod * (val.numerator // (mod * val.denominator)))
            out.append(row)
        return out

    def to_json(self) -> Dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "gram": [list(r) for r in self.gram],
            "rank": self.rank,
            "determinant": self.determinant,
            "signature": list(self.signature),
            "invariant_factors": self.discriminant_group,
            "even": self.is_even,
        }


def gram_of(vectors: Sequence[Sequence[int]], ambient: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Gram matrix of integer coordinate vectors under an ambient form."""
    gv = matmul(vectors, ambient)
    return tuple(tuple(sum(a * b for a, b in zip(row, v)) for v in vectors) for row in gv)


def sublattice(vectors: Sequence[Sequence[int]], ambient: IntegralLattice, labels: Sequence[str] = None,
               name: str = "") -> IntegralLattice:
    labels = tuple(labels) if labels is not None else tuple(f"v{i + 1}" for i in range(len(vectors)))
    return IntegralLattice(labels, gram_of(vectors, ambient.gram), name)


def lattice_rank(vectors: Sequence[Sequence[int]]) -> int:
    return smith_normal_form(vectors).rank if vectors else 0


def orthogonal_complement(vectors: Sequence[Sequence[int]], ambient: IntegralLattice) -> List[List[int]]:
    """Z-basis of {x in the ambient lattice : x . v = 0 for all v}."""
    if not vectors:
        return [[int(i == j) for j in range(ambient.rank)] for i in range(ambient.rank)]
    rows = matmul(vectors, ambient.gram)
    return integer_kernel(rows, ambient.rank)


# ---------------------------------------------------------------------------
# NS(F)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def ns_fermat() -> IntegralLattice:
    full = line_intersection_matrix()
    idx = [i - 1 for i in FERMAT_NS_BASIS]
    gram = tuple(tuple(full[i][j] for j in idx) for i in idx)
    lat = IntegralLattice(tuple(f"l{i}" for i in FERMAT_NS_BASIS), gram, "NS(F)")
    if lat.determinant != -64:
        raise LatticeError(f"20-line basis has determinant {lat.determinant}, expected -64")
    return lat


@lru_cache(maxsize=None)
def line_coordinates() -> Tuple[Tuple[int, ...], ...]:
    """Coordinates of all 48 lines in the 20-line basis of NS(F)."""
    full = line_intersection_matrix()
    ns = ns_fermat()
    idx = [i - 1 for i in FERMAT_NS_BASIS]
    out = []
    for k in range(len(full)):
        rhs = [full[k][j] for j in idx]
        x = rational_solve(ns.gram, rhs)
        if any(c.denominator != 1 for c in x):
            raise LatticeError(f"l{k + 1} is not an integral combination of the basis")
        out.append(tuple(int(c) for c in x))
    return tuple(out)


def class_of(combination: Dict[int, int]) -> List[int]:
    """NS(F) coordinates of sum c_i l_i (1-based line indices)."""
    coords = line_coordinates()
    out = [0] * 20
    for i, c in combination.items():
        out = [a + c * b for a, b in zip(out, coords[i - 1])]
    return out


def hyperplane_class() -> List[int]:
    """h = l1 + l2 + l3 + l4, the plane section x1 = xi_8 x2."""
    return class_of({1: 1, 2: 1, 3: 1, 4: 1})


# ---------------------------------------------------------------------------
# Symmetries of F acting on NS(F)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuarticSymmetry:
    """(g x)_i = i^(a_sigma(i)) x_sigma(i) on P^3: a permutation composed with a
    diagonal scaling by fourth roots of unity; twist[0] normalized to 0."""

    perm: Tuple[int, ...]
    twist: Tuple[int, ...]

    @classmethod
    def make(cls, perm: Sequence[int] = (0, 1, 2, 3), twist: Sequence[int] = (0, 0, 0, 0)) -> "QuarticSymmetry":
        perm = tuple(perm)
        if sorted(perm) != [0, 1, 2, 3] or len(twist) != 4:
            raise ValueError("need a permutation of 4 points and 4 twist entries")
        base = twist[0]
        return cls(perm, tuple((t - base) % 4 for t in twist))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], twist: Sequence[int] = (0, 0, 0, 0)) -> "QuarticSymmetry":
        perm = list(range(4))
        for cyc in cycles:
            for i, c in enumerate(cyc):
                perm[c - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls.make(perm, twist)

    def apply(self, v: Vector) -> Vector:
        return tuple(_root8(2 * self.twist[self.perm[i]]) * v[self.perm[i]] for i in range(4))

    def __mul__(self, other: "QuarticSymmetry") -> "QuarticSymmetry":
        rho = [other.perm[self.perm[i]] for i in range(4)]
        c = [0] * 4
        for i in range(4):
            c[rho[i]] = self.twist[self.perm[i]] + other.twist[rho[i]]
        return QuarticSymmetry.make(rho, c)

    def sign(self) -> int:
        inv = sum(1 for i in range(4) for j in range(i + 1, 4) if self.perm[i] > self.perm[j])
        return -1 if inv % 2 else 1

    def is_symplectic(self) -> bool:
        """Acts trivially on the 2-form Res(Omega / F): det M = 1 since F(M x) = F(x)."""
        return self.sign() * (1 if sum(self.twist) % 4 == 0 else -1 if sum(self.twist) % 4 == 2 else 0) == 1

    def preserves_pencil(self) -> bool:
        """Preserves every X_lambda, i.e. also fixes the product x1 x2 x3 x4."""
        return sum(self.twist) % 4 == 0

    def __str__(self) -> str:
        return f"{list(p + 1 for p in self.perm)};{','.join(map(str, self.twist))}"


def line_permutation(g: QuarticSymmetry) -> Tuple[int, ...]:
    """0-based image index of each line under g."""
    lookup = _line_lookup()
    out = []
    for line in lines_on_fermat():
        key = _plucker_key(g.apply(line.u), g.apply(line.w))
        if key not in lookup:
            raise LatticeError(f"{g} does not map {line.label()} to a line of the list")
        out.append(lookup[key])
    return tuple(out)


def ns_matrix(g: QuarticSymmetry) -> List[List[int]]:
    """Integer matrix of g on NS(F); column j is the image of basis line j."""
    perm = line_permutation(g)
    coords = line_coordinates()
    cols = [coords[perm[i - 1]] for i in FERMAT_NS_BASIS]
    return transpose(cols)


@dataclass
class LatticeGroupAction:
    generators: Tuple[QuarticSymmetry, ...]
    permutations: Tuple[Tuple[int, ...], ...]
    matrices: Tuple[Tuple[Tuple[int, ...], ...], ...]
    name: str = ""


def action_on_ns(generators: Sequence[QuarticSymmetry], name: str = "") -> LatticeGroupAction:
    ns = ns_fermat()
    perms, mats = [], []
    for g in generators:
        m = ns_matrix(g)
        if matmul(matmul(transpose(m), ns.gram), m) != [list(r) for r in ns.gram]:
            raise LatticeError(f"{g} does not preserve the intersection form")
        perms.append(line_permutation(g))
        mats.append(tuple(tuple(r) for r in m))
    return LatticeGroupAction(tuple(generators), tuple(perms), tuple(mats), name)


def invariant_vectors(action: LatticeGroupAction) -> List[List[int]]:
    rows = []
    for m in action.matrices:
        rows += [[m[i][j] - int(i == j) for j in range(20)] for i in range(20)]
    return integer_kernel(rows, 20) if rows else [[int(i == j) for j in range(20)] for i in range(20)]


def invariant_lattice(action: LatticeGroupAction) -> IntegralLattice:
    vecs = invariant_vectors(action)
    return sublattice(vecs, ns_fermat(), name=f"NS(F)^{action.name}")


def coinvariant_vectors(action: LatticeGroupAction) -> List[List[int]]:
    return orthogonal_complement(invariant_vectors(action), ns_fermat())


def coinvariant_lattice(action: LatticeGroupAction) -> IntegralLattice:
    vecs = coinvariant_vectors(action)
    return sublattice(vecs, ns_fermat(), labels=[f"w{i + 1}" for i in range(len(vecs))],
                      name=f"Omega_{action.name}")


def symplectic_symmetries() -> List[QuarticSymmetry]:
    """All symplectic projective symmetries of F of the form permutation times
    diagonal fourth roots of unity (a group of order 384)."""
    out = []
    for perm in permutations(range(4)):
        for tw in product(range(4), repeat=3):
            g = QuarticSymmetry.make(perm, (0,) + tw)
            if g.is_symplectic():
                out.append(g)
    return out


def generate(generators: Sequence[QuarticSymmetry]) -> List[QuarticSymmetry]:
    e = QuarticSymmetry.make()
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda g: (g.perm, g.twist))


H3_GENERATORS = (
    QuarticSymmetry.make((0, 1, 2, 3), (1, 3, 0, 0)),
    QuarticSymmetry.make((0, 1, 2, 3), (1, 0, 3, 0)),
)
# Symplectic S_4 on F: sign changes of two coordinates, the 3-cycle and a
# transposition composed with x4 -> -x4. It does not preserve X_lambda for
# lambda != 0 (the odd elements flip the sign of x1 x2 x3 x4); its subgroup
# A_4 (sign changes and the 3-cycle) preserves every X_lambda.
S4_GENERATORS = (
    QuarticSymmetry.from_cycles([(1, 2, 3)]),
    QuarticSymmetry.make((0, 1, 2, 3), (0, 0, 2, 2)),
    QuarticSymmetry.from_cycles([(1, 2)], (0, 0, 0, 2)),
)
A4_GENERATORS = (
    QuarticSymmetry.from_cycles([(1, 2, 3)]),
    QuarticSymmetry.make((0, 1, 2, 3), (0, 0, 2, 2)),
)
# Even permutations of the coordinates, another A_4 acting on every X_lambda.
A4_PERMUTATION_GENERATORS = (
    QuarticSymmetry.from_cycles([(1, 2), (3, 4)]),
    QuarticSymmetry.from_cycles([(1, 2, 3)]),
)
NAMED_ACTIONS = {
    "H3": H3_GENERATORS,
    "S4": S4_GENERATORS,
    "A4": A4_GENERATORS,
    "A4perm": A4_PERMUTATION_GENERATORS,
}


def named_action(name: str) -> LatticeGroupAction:
    if name not in NAMED_ACTIONS:
        raise KeyError(f"unknown lattice action {name!r}")
    return action_on_ns(NAMED_ACTIONS[name], name)


# ---------------------------------------------------------------------------
# Explicit spanning sets (line combinations) of coinvariant lattices
# ---------------------------------------------------------------------------

H3_COINVARIANT_CLASSES = (
    {2: -1, 37: 1}, {1: -1, 35: 1}, {2: -1, 34: 1}, {1: -1, 33: 1}, {2: -1, 23: 1}, {1: -1, 22: 1},
    {2: -1, 21: 1}, {1: -1, 19: 1}, {18: 1, 2: -1}, {1: -1, 17: 1}, {1: -1, 11: 1}, {10: 1, 2: -1},
    {1: -1, 9: 1}, {2: -1, 7: 1}, {1: -1, 6: 1}, {2: -1, 5: 1}, {2: -1, 4: 1}, {1: -1, 3: 1},
)
# The first 16 span the A_4 coinvariants, all 17 the S_4 coinvariants.
S4_COINVARIANT_CLASSES = (
    {37: 1, 5: -1}, {2: 1, 22: -1, 23: -1, 35: 1}, {2: -1, 34: 1}, {1: -1, 33: 1}, {1: -1, 17: 1},
    {17: -1, 2: -1, 22: 1, 5: 1}, {2: -1, 21: 1, 23: 1, 4: -1}, {19: 1, 21: -1, 35: -1, 37: 1},
    {18: 1, 2: -1}, {1: 1, 17: -1, 21: -1, 5: 1}, {1: -1, 11: 1}, {10: 1, 4: -1}, {35: -1, 9: 1},
    {2: -1, 4: -1, 5: 1, 7: 1}, {1: -1, 34: -1, 37: 1, 6: 1}, {3: 1, 35: -1}, {1: -1, 37: 1},
)


def spanned_lattice(classes: Sequence[Dict[int, int]], name: str = "") -> IntegralLattice:
    """The lattice spanned by line combinations (must be independent)."""
    vecs = [class_of(c) for c in classes]
    if lattice_rank(vecs) != len(vecs):
        raise LatticeError("classes are linearly dependent")
    return sublattice(vecs, ns_fermat(), name=name)


def contained_in(vectors: Sequence[Sequence[int]], basis: Sequence[Sequence[int]]) -> bool:
    """Whether every vector is an integral combination of the basis rows
    (the basis rows must be independent)."""
    if not vectors:
        return True
    stacked = [list(b) for b in basis] + [list(v) for v in vectors]
    if lattice_rank(stacked) != len(basis):
        return False
    return _covolume(stacked) == _covolume(basis)


def _covolume(rows: Sequence[Sequence[int]]) -> int:
    """Product of the nonzero Smith invariants: the index of the span in its saturation."""
    out = 1
    for d in smith_normal_form(rows).diagonal:
        if d:
            out *= d
    return out


# ---------------------------------------------------------------------------
# NS(X_lambda) and its transcendental lattice
# ---------------------------------------------------------------------------

@dataclass
class XLambdaLattices:
    ns: IntegralLattice
    h_plus_omega: IntegralLattice
    index: int
    n_vectors: Tuple[Tuple[int, ...], ...]
    v: Tuple[int, ...]
    transcendental: IntegralLattice


def ns_xlambda() -> XLambdaLattices:
    """NS(X_lambda) from n_1 = h, n_i = h + b_(i-1), n_19 = (h + b_17 + b_18) / 2."""
    ns = ns_fermat()
    h = hyperplane_class()
    b = [class_of(c) for c in H3_COINVARIANT_CLASSES]
    n19 = [x + y + z for x, y, z in zip(h, b[16], b[17])]
    if any(c % 2 for c in n19):
        raise LatticeError("(h + b17 + b18) / 2 is not integral in NS(F)")
    n_vecs = [h] + [[x + y for x, y in zip(h, bi)] for bi in b[:17]] + [[c // 2 for c in n19]]
    lat = sublattice(n_vecs, ns, labels=[f"n{i + 1}" for i in range(19)], name="NS(X_lambda)")
    hb = sublattice([h] + b, ns, labels=["h"] + [f"b{i + 1}" for i in range(18)], name="Zh + Omega_H3")
    ratio = Fraction(hb.determinant, lat.determinant)
    if ratio.denominator != 1:
        raise LatticeError("Zh + Omega_H3 is not a sublattice of NS(X_lambda)")
    index_sq = int(ratio)
    index = int(round(index_sq ** 0.5))
    if index * index != index_sq:
        raise LatticeError(f"determinant ratio {index_sq} is not a square")
    perp = orthogonal_complement(n_vecs, ns)
    if len(perp) != 1:
        raise LatticeError("NS(X_lambda) should have corank one in NS(F)")
    v = tuple(perp[0])
    v2 = sum(x * g * y for x, row in zip(v, ns.gram) for g, y in zip(row, v))
    # T_F + Z v sits inside T(X_lambda) with index sqrt(|det| ratio) = 1
    t_gram = ((8, 0, 0), (0, 8, 0), (0, 0, v2))
    t = IntegralLattice(("t1", "t2", "v"), t_gram, "T(X_lambda)")
    if abs(t.determinant) != abs(lat.determinant):
        raise LatticeError("T_F + Z v is not the full transcendental lattice")
    return XLambdaLattices(lat, hb, index, tuple(tuple(x) for x in n_vecs), v, t)


def nikulin_embedding_check(rank: int, length: int) -> bool:
    """Sufficient condition l <= 22 - rank - 2 for a unique primitive embedding."""
    return length <= K3_LATTICE_RANK - rank - 2


@dataclass
class HalvingReport:
    twice: bool  # T = L(2) for an integral L
    even: bool  # that L is even
    halvable: bool
    L: Optional[IntegralLattice]
    pairings: Tuple[Tuple[Fraction, ...], ...]


def twice_lattice_test(T: IntegralLattice) -> HalvingReport:
    """Decide whether T = L(2) with L even, from the order-2 elements d_i beta_i
    of the discriminant group (beta_i of order 2 d_i).

    Requires rank T = length of the discriminant group."""
    gens = T.dual_generators()
    if len(gens) != T.rank:
        raise LatticeError(f"rank {T.rank} differs from discriminant length {len(gens)}")
    if any(order % 2 for order, _ in gens):
        return HalvingReport(False, False, False, None, ())
    half = [[Fraction(order // 2) * c for c in vec] for order, vec in gens]
    pairings = tuple(tuple(T.pairing(x, y) for y in half) for x in half)
    twice = all((2 * p).denominator == 1 for row in pairings for p in row)
    even = twice and all(pairings[i][i].denominator == 1 for i in range(len(half)))
    L = None
    if twice:
        if any(g % 2 for row in T.gram for g in row):
            raise LatticeError("inconsistent halving test")
        L = IntegralLattice(T.labels, tuple(tuple(g // 2 for g in row) for row in T.gram), f"{T.name}(1/2)")
        if L.is_even != even:
            raise LatticeError("inconsistent evenness test")
    return HalvingReport(twice, even, twice and even, L, pairings)
