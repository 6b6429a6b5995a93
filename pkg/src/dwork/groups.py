"""Permutation-diagonal automorphisms of the Dwork pencil.

An element g = (sigma, a) of S_(n+1) x| H_n acts on C^(n+1) by the matrix
P_sigma * D_a, i.e.

    (g x)_i = xi^(a_sigma(i)) * x_sigma(i),     xi = exp(2 pi i / (n+1)),

so the twist is applied first and the coordinates are then permuted. The
twist satisfies sum(a) = 0 mod (n+1) and is normalized to a_1 = 0, which
makes equality of tuples equality of projectivities. The product g * h is
the matrix product (h acts first).

Literal syntax: cycles of sigma, optionally followed by ``;a_1,...,a_(n+1)``,
e.g. ``(1 2)(3 4);0,0,0,0,0``. The group-spec parser also accepts
``h(a_1,...)`` for a pure twist and ``(1 2 3)h(0,0,0,1,4)`` for sigma * h.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True, order=True)
class GroupElement:
    n: int
    perm: Tuple[int, ...]  # 0-based: perm[i] = sigma(i)
    twist: Tuple[int, ...]  # normalized, twist[0] == 0

    @property
    def N(self) -> int:
        return self.n + 1

    @classmethod
    def make(cls, n: int, perm: Sequence[int] = None, twist: Sequence[int] = None) -> "GroupElement":
        N = n + 1
        perm = tuple(range(N)) if perm is None else tuple(perm)
        twist = (0,) * N if twist is None else tuple(int(x) % N for x in twist)
        if sorted(perm) != list(range(N)) or len(twist) != N:
            raise ValueError("permutation or twist has the wrong length")
        if sum(twist) % N:
            raise ValueError(f"twist {twist} does not sum to 0 mod {N}")
        base = twist[0]
        return cls(n, perm, tuple((x - base) % N for x in twist))

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls.make(n)

    @classmethod
    def diagonal(cls, twist: Sequence[int]) -> "GroupElement":
        return cls.make(len(twist) - 1, None, twist)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]], twist: Sequence[int] = None) -> "GroupElement":
        """Cycles are 1-based: (1 2 3) means sigma(1)=2, sigma(2)=3, sigma(3)=1."""
        perm = list(range(n + 1))
        seen = set()
        for cyc in cycles:
            cyc = [c - 1 for c in cyc]
            if any(c < 0 or c > n or c in seen for c in cyc):
                raise ValueError(f"invalid cycle {cyc}")
            seen.update(cyc)
            for i, c in enumerate(cyc):
                perm[c] = cyc[(i + 1) % len(cyc)]
        return cls.make(n, perm, twist)

    # group law ----------------------------------------------------------------
    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.N)) and not any(self.twist)

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity():
            g = g * self
            k += 1
        return k

    def power(self, k: int) -> "GroupElement":
        k %= self.order()
        out = GroupElement.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "GroupElement":
        return self.power(-1)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, 0-based, each starting at its smallest entry."""
        seen, out = set(), []
        for i in range(self.N):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.perm[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.perm[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    # matrix data --------------------------------------------------------------
    def monomial(self) -> Tuple[Tuple[int, ...], Tuple[Fraction, ...]]:
        """(pi, theta) with (g x)_i = exp(2 pi i theta_i) x_pi(i)."""
        return self.perm, tuple(Fraction(self.twist[self.perm[i]], self.N) for i in range(self.N))

    # text ---------------------------------------------------------------------
    def __str__(self) -> str:
        cyc = "".join("(" + " ".join(str(c + 1) for c in cy) + ")" for cy in self.cycles()) or "()"
        return f"{cyc};{','.join(map(str, self.twist))}"

    def __repr__(self) -> str:
        return f"GroupElement({self})"


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """Matrix product M_g * M_h (h acts first)."""
    if g.n != h.n:
        raise ValueError("elements act on different dimensions")
    N = g.N
    rho = [h.perm[g.perm[i]] for i in range(N)]
    c = [0] * N
    for i in range(N):
        c[rho[i]] = g.twist[g.perm[i]] + h.twist[rho[i]]
    return GroupElement.make(g.n, rho, c)


def conjugate(g: GroupElement, by: GroupElement) -> GroupElement:
    """by * g * by^-1."""
    return by * g * by.inverse()


def preserves_period(g: GroupElement) -> bool:
    return g.is_even()


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_CYCLES = r"(?:\(\s*[\d\s]*\))*"
_ELEMENT = re.compile(
    rf"\s*(?P<cyc>{_CYCLES})\s*(?:;\s*(?P<tw>-?\d+(?:\s*,\s*-?\d+)*)|h\(\s*(?P<h>-?\d+(?:\s*,\s*-?\d+)*)\s*\))?\s*"
)


def _parse_cycles(text: str, n: int) -> List[List[int]]:
    out = []
    for body in re.findall(r"\(([^)]*)\)", text):
        body = body.strip()
        if not body:
            continue
        if " " in body:
            nums = [int(x) for x in body.split()]
        else:
            if n + 1 > 9:
                raise ValueError("cycles need spaces when n+1 > 9")
            nums = [int(ch) for ch in body]
        out.append(nums)
    return out


def _match_element(text: str, pos: int, n: int):
    m = _ELEMENT.match(text, pos)
    if not m or m.end() == pos or not (m.group("cyc") or m.group("tw") or m.group("h")):
        raise ValueError(f"cannot parse group element at {text[pos:]!r}")
    tw = m.group("tw") or m.group("h")
    twist = [int(x) for x in tw.split(",")] if tw else None
    if twist is not None and len(twist) != n + 1:
        raise ValueError(f"twist {twist} must have {n + 1} entries")
    return GroupElement.from_cycles(n, _parse_cycles(m.group("cyc") or "", n), twist), m.end()


def parse_element(text: str, n: int) -> GroupElement:
    g, end = _match_element(text, 0, n)
    if text[end:].strip():
        raise ValueError(f"trailing text in element literal: {text[end:]!r}")
    return g


def parse_generators(text: str, n: int) -> List[GroupElement]:
    """Generators separated by commas or '|' outside of the twist syntax."""
    gens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        g, pos = _match_element(text, pos, n)
        gens.append(g)
        rest = text[pos:].lstrip()
        if rest[:1] in (",", "|"):
            pos = len(text) - len(rest) + 1
        elif rest:
            raise ValueError(f"expected a separator at {rest!r}")
        else:
            break
    if not gens:
        raise ValueError("empty generator list")
    return gens


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

@dataclass
class ConjugacyClass:
    representative: GroupElement
    size: int
    members: Tuple[GroupElement, ...] = ()


@dataclass
class Subgroup:
    generators: Tuple[GroupElement, ...]
    elements: Tuple[GroupElement, ...]
    name: str = ""
    _index: Dict[GroupElement, int] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.generators[0].n if self.generators else self.elements[0].n

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.elements)}
        return g in self._index

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)


def generate_subgroup(gens: Sequence[GroupElement], cap: int = DEFAULT_CAP, name: str = "") -> Subgroup:
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators act on different dimensions")
    e = GroupElement.identity(n)
    seen = {e}
    order = [e]
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
                    if len(order) > cap:
                        raise ValueError(f"subgroup closure exceeds cap {cap}")
        frontier = nxt
    return Subgroup(generators=gens, elements=tuple(sorted(order)), name=name)


def conjugacy_classes(G: Subgroup, with_members: bool = False) -> List[ConjugacyClass]:
    gens = [(g, g.inverse()) for g in G.generators]
    assigned = set()
    out = []
    for x in G.elements:  # sorted, so the identity and representatives are canonical
        if x in assigned:
            continue
        cls = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g, gi in gens:
                    z = g * y * gi
                    if z not in cls:
                        cls.add(z)
                        nxt.append(z)
            frontier = nxt
        assigned |= cls
        members = tuple(sorted(cls))
        out.append(ConjugacyClass(members[0], len(cls), members if with_members else ()))
    return out


def centralizer(s: GroupElement, G: Subgroup) -> Subgroup:
    if s not in G:
        raise ValueError(f"{s} is not in the group")
    elems = tuple(g for g in G.elements if g * s == s * g)
    return Subgroup(generators=elems, elements=elems, name=f"C({s})")


# ---------------------------------------------------------------------------
# Named groups acting on the quintic (n = 4)
# ---------------------------------------------------------------------------

NAMED_GENERATORS: Dict[str, str] = {
    "A5": "(123),(12345)",
    "H4": "h(1,4,0,0,0),h(0,1,4,0,0),h(0,0,1,4,0)",
    "A5xH4": "(123),(12345),h(1,4,0,0,0),h(0,1,4,0,0),h(0,0,1,4,0)",
    "A4": "(12)(34),(123)",
    "D5a": "(12)(35),(12345)",
    "S3": "(12)(45),(23)(45)",
    "Z5": "(12345)",
    "V4": "(12)(34),(13)(24)",
    "Z3": "(123)",
    "Z2": "(12)(34)",
    "G1": "h(1,4,0,0,0),h(0,0,1,4,0)",
    "G2": "h(1,4,0,0,0),h(1,0,4,0,0)",
    "G3": "h(1,1,0,0,3),h(1,3,1,0,0)",
    "Z10": "(12)(34)h(0,0,1,1,3)",
    "Z15": "(123)h(0,0,0,1,4)",
    "D5b": "h(1,4,0,0,0),(12)(34)",
    "Free25": "(12345),h(0,1,2,3,4)",
}


def named_group(name: str, cap: int = DEFAULT_CAP) -> Subgroup:
    if name not in NAMED_GENERATORS:
        raise KeyError(f"unknown group name {name!r}")
    return generate_subgroup(parse_generators(NAMED_GENERATORS[name], 4), cap=cap, name=name)


def group_from_spec(spec: str, n: int = 4, cap: int = DEFAULT_CAP) -> Subgroup:
    if spec in NAMED_GENERATORS:
        if n != 4:
            raise ValueError("named groups act on the quintic (n = 4)")
        return named_group(spec, cap)
    return generate_subgroup(parse_generators(spec, n), cap=cap, name=spec)
