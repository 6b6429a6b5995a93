"""Weighted projective space combinatorics for quotients of the Dwork pencil.

Covers the well-formedness test of a weighted complete intersection, isotropy
orders of points, the closed-form age of the cyclic isotropy generators of
T = X / S_(n+1) and the resulting terminality verdict.

Convention for q(p): a weight system with r weights and c equations has
q(p) = (r - 2) - c + 1 - m(p) + k(p), where m(p) counts weights divisible by
p and k(p) counts equation degrees divisible by p. For the symmetric quotient
S in WP(1, 2, ..., n+1) this is q(p) = n - 1 - m(p) + k(p).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from functools import reduce
from typing import Dict, List, Sequence, Tuple


def primes_up_to(m: int) -> List[int]:
    if m < 2:
        return []
    sieve = bytearray([1]) * (m + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(m ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(m + 1) if sieve[p]]


@dataclass(frozen=True)
class WeightSystem:
    weights: Tuple[int, ...]
    degrees: Tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) < 2 or any(w < 1 for w in self.weights):
            raise ValueError("need at least two positive weights")
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise ValueError("need at least one positive equation degree")

    @classmethod
    def symmetric_quotient(cls, n: int) -> "WeightSystem":
        """S_lambda: one equation of degree n+1 in WP(1, 2, ..., n+1)."""
        if n < 2:
            raise ValueError("n >= 2 required")
        return cls(tuple(range(1, n + 2)), (n + 1,))

    @classmethod
    def double_quotient(cls, n: int) -> "WeightSystem":
        """T_lambda: equations of degree n+1 and n(n+1) in WP(1, ..., n+1, n(n+1)/2)."""
        if n < 2:
            raise ValueError("n >= 2 required")
        return cls(tuple(range(1, n + 2)) + (n * (n + 1) // 2,), (n + 1, n * (n + 1)))

    @property
    def codimension(self) -> int:
        return len(self.degrees)

    def m(self, p: int) -> int:
        return sum(1 for a in self.weights if a % p == 0)

    def k(self, p: int) -> int:
        return sum(1 for d in self.degrees if d % p == 0)

    def q(self, p: int) -> int:
        return (len(self.weights) - 2) - self.codimension + 1 - self.m(p) + self.k(p)


@dataclass(frozen=True)
class PrimeReport:
    p: int
    m: int
    k: int
    q: int


@dataclass(frozen=True)
class WellFormedReport:
    weights: Tuple[int, ...]
    degrees: Tuple[int, ...]
    primes: Tuple[PrimeReport, ...]
    well_formed: bool

    def q(self, p: int) -> int:
        for r in self.primes:
            if r.p == p:
                return r.q
        raise KeyError(p)


def wellformed_check(ws: WeightSystem) -> WellFormedReport:
    """q(p) >= 2 for every prime p; primes above the largest weight give
    m(p) = 0 and cannot fail, so only p <= max weight are scanned."""
    rows = tuple(PrimeReport(p, ws.m(p), ws.k(p), ws.q(p)) for p in primes_up_to(max(ws.weights)))
    return WellFormedReport(ws.weights, ws.degrees, rows, all(r.q >= 2 for r in rows))


def isotropy_order(weights: Sequence[int]) -> int:
    """Order of the cyclic isotropy group of a point whose nonzero coordinates
    carry the given weights."""
    if not weights:
        raise ValueError("a point has at least one nonzero coordinate")
    return reduce(gcd, weights)


# ---------------------------------------------------------------------------
# Ages of the cyclic isotropy groups of T_lambda
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AgeQuery:
    n: int
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("isotropy order k >= 2 required")
        if self.n < 2:
            raise ValueError("n >= 2 required")

    @property
    def s(self) -> int:
        return (self.n + 1) // self.k

    @property
    def t(self) -> int:
        return (self.n + 1) % self.k

    @property
    def a(self) -> int:
        return (self.t * (self.t + 1) // 2) // self.k


def ageterm(q: AgeQuery) -> Fraction:
    """(1/k) (floor((n+1)/k) k(k-1)/2 + a k)."""
    k = q.k
    return Fraction(q.s * k * (k - 1) // 2 + q.a * k, k)


def residue(r: int, k: int) -> int:
    """[r]_k, the representative of r mod k in 0..k-1."""
    return r % k


def weight_sum_after_elimination(n: int, k: int) -> int:
    """Sum of the isotropy weights after eliminating the two coordinates solved
    for by the equations, taken literally: sum of [a]_k over the weights other
    than k, minus [n+1]_k and [n(n+1)]_k."""
    weights = [j for j in range(1, n + 2) if j != k] + [n * (n + 1) // 2]
    return sum(residue(w, k) for w in weights) - residue(n + 1, k) - residue(n * (n + 1), k)


def fixed_locus_dimension(n: int, k: int = 3) -> int:
    """Dimension of the fixed locus of the order-3 isotropy generator: s - 2."""
    if k != 3:
        raise ValueError("only the order-3 sector is modelled")
    return (n + 1) // 3 - 2


@dataclass(frozen=True)
class TerminalityVerdict:
    n: int
    has_crepant_resolution: bool
    witness: Dict[str, object] = field(default_factory=dict)


def terminality_verdict(n: int) -> TerminalityVerdict:
    """Crepant resolution of T_lambda exists iff the quotient is not terminal.

    For n >= 5 the order-3 isotropy sector is exhibited: age(g) from the
    closed form, dim Fix = s - 2 and age(g^-1) = n - 1 - dim Fix - age(g).
    Both ages exceed 1, so the singularity is terminal.
    """
    if n < 2:
        raise ValueError("n >= 2 required")
    if n <= 4:
        reason = "smooth" if n == 2 else "non-terminal quotient singularities"
        return TerminalityVerdict(n, True, {"reason": reason})
    q = AgeQuery(n, 3)
    age_g = ageterm(q)
    dim_fix = fixed_locus_dimension(n)
    age_inv = (n - 1) - dim_fix - age_g
    terminal = age_g > 1 and age_inv > 1
    witness = {
        "k": 3,
        "s": q.s,
        "t": q.t,
        "age_g": age_g,
        "dim_fix": dim_fix,
        "age_g_inverse": age_inv,
        "terminal": terminal,
    }
    return TerminalityVerdict(n, not terminal, witness)
