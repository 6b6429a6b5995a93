"""Exact arithmetic: cyclotomic numbers, sparse multivariate polynomials,
distinct-root counting and reduction modulo primes.

Rationals are :class:`fractions.Fraction`. A :class:`Cyclotomic` lives in
``Q(xi_m)`` for an explicit conductor ``m`` and is stored as a residue modulo
the cyclotomic polynomial ``Phi_m`` (coefficient tuple of length ``phi(m)``).
Binary operations on different conductors lift both sides to the lcm.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Angle = Fraction  # a root of unity exp(2*pi*i*angle), angle taken mod 1


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def normalize_angle(a) -> Fraction:
    a = Fraction(a)
    return a - (a.numerator // a.denominator)


# ---------------------------------------------------------------------------
# Integer polynomials (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _poly_divmod_int(num: List[int], den: List[int]) -> Tuple[List[int], List[int]]:
    """Exact division of integer polynomials by a monic divisor."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_table(m: int) -> Tuple[Tuple[int, ...], ...]:
    """Row k is x^k reduced modulo Phi_m, for 0 <= k < 2*phi(m)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    for _ in range(max(2 * deg, m)):
        rows.append(tuple(cur))
        # multiply by x
        top = cur[-1] if deg else 0
        cur = [0] + cur[:-1] if deg else []
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _reduce(coeffs: Sequence[Fraction], m: int) -> Tuple[Fraction, ...]:
    deg = euler_phi(m)
    table = _power_table(m)
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k < deg:
            out[k] += c
        else:
            row = table[k] if k < len(table) else table[k % m]
            for j, r in enumerate(row):
                if r:
                    out[j] += c * r
    return tuple(out)


class Cyclotomic:
    """An element of Q(xi_m), xi_m = exp(2*pi*i/m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Sequence = ()):
        deg = euler_phi(m)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = list(_reduce(cs, m))
        cs += [Fraction(0)] * (deg - len(cs))
        self.m = m
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    # construction -----------------------------------------------------------
    @classmethod
    def rational(cls, q) -> "Cyclotomic":
        return cls(1, [Fraction(q)])

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls(1, [0])

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls(1, [1])

    @classmethod
    def root(cls, angle) -> "Cyclotomic":
        """exp(2*pi*i*angle) for a rational angle."""
        a = normalize_angle(angle)
        m = a.denominator
        row = _power_table(m)[a.numerator]
        return cls(m, row)

    @classmethod
    def xi(cls, m: int, k: int = 1) -> "Cyclotomic":
        return cls.root(Fraction(k, m))

    @classmethod
    def coerce(cls, x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        return cls.rational(x)

    # structure --------------------------------------------------------------
    def lift(self, m: int) -> "Cyclotomic":
        """Embed into Q(xi_m); requires self.m | m."""
        if m == self.m:
            return self
        if m % self.m:
            raise ValueError(f"conductor {self.m} does not divide {m}")
        step = m // self.m
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return Cyclotomic(m, _reduce(coeffs, m))

    def _pair(self, other) -> Tuple["Cyclotomic", "Cyclotomic"]:
        other = Cyclotomic.coerce(other)
        if other.m == self.m:
            return self, other
        m = lcm(self.m, other.m)
        return self.lift(m), other.lift(m)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        a, b = self._pair(other)
        return Cyclotomic(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            q = Fraction(other)
            return Cyclotomic(self.m, [x * q for x in self.coeffs])
        a, b = self._pair(other)
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.m, _reduce(prod, a.m))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended Euclid in Q[x]: s*a + t*Phi = 1
        a = _trim([c for c in self.coeffs])
        phi = _trim([Fraction(c) for c in cyclotomic_polynomial(self.m)])
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while not (len(r1) == 1 and r1[0] == 0):
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_qsub(s0, _qmul(q, s1)))
        # gcd r0 is a nonzero constant since Phi is irreducible
        c = r0[0]
        return Cyclotomic(self.m, _reduce([x / c for x in s0], self.m))

    def __truediv__(self, other):
        other = Cyclotomic.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __eq__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # type: ignore[assignment]

    def conj(self) -> "Cyclotomic":
        out = Cyclotomic.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + Cyclotomic.root(Fraction(-k, self.m)) * c
        return out

    def to_complex(self) -> complex:
        import cmath

        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / self.m)
            for k, c in enumerate(self.coeffs)
        )

    def mod_p(self, p: int, zeta: int) -> int:
        """Image under xi_m -> zeta in F_p (zeta a primitive m-th root mod p)."""
        acc = 0
        zk = 1
        for c in self.coeffs:
            if c:
                if c.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator divisible by {p}")
                acc += c.numerator * pow(c.denominator, -1, p) * zk
            zk = zk * zeta % p
        return acc % p

    def __repr__(self):
        if self.is_rational():
            return f"Cyclotomic({self.to_rational()})"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"Cyclotomic(m={self.m}: {' + '.join(terms)})"


def cyclotomic_arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    """Same-conductor arithmetic; lift with :meth:`Cyclotomic.lift` first."""
    if a.m != b.m:
        raise ValueError("operands must share a conductor; lift to the lcm first")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def lift_common(values: Iterable[Cyclotomic]) -> List[Cyclotomic]:
    vals = [Cyclotomic.coerce(v) for v in values]
    m = 1
    for v in vals:
        m = lcm(m, v.m)
    return [v.lift(m) for v in vals]


# ---------------------------------------------------------------------------
# Rational polynomial helpers for inversion
# ---------------------------------------------------------------------------

def _trim(p: List[Fraction]) -> List[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _qmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _qpoly_divmod(a, b):
    a = list(a)
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, d in enumerate(b):
                a[k + j] -= c * d
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


# ---------------------------------------------------------------------------
# Univariate polynomials over cyclotomic fields
# ---------------------------------------------------------------------------

UPoly = List[Cyclotomic]  # low degree first, no trailing zeros


def _utrim(p: Sequence[Cyclotomic]) -> UPoly:
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def _uderiv(p: UPoly) -> UPoly:
    return _utrim([c * k for k, c in enumerate(p)][1:])


def _umod(a: UPoly, b: UPoly) -> UPoly:
    a = list(a)
    inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        shift = len(a) - len(b)
        for j, d in enumerate(b):
            a[shift + j] = a[shift + j] - c * d
        a = _utrim(a)
    return a


def ugcd(a: UPoly, b: UPoly) -> UPoly:
    a, b = _utrim(a), _utrim(b)
    while b:
        a, b = b, _umod(a, b)
    return a


def univariate_root_count(coeffs: Sequence) -> int:
    """Number of distinct roots in the algebraic closure: deg f - deg gcd(f, f')."""
    f = _utrim([Cyclotomic.coerce(c) for c in coeffs])
    if not f:
        raise ValueError("root count of the zero polynomial is undefined")
    if len(f) == 1:
        return 0
    g = ugcd(f, _uderiv(f))
    return (len(f) - 1) - (len(g) - 1)


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials with an optional formal parameter lambda
# ---------------------------------------------------------------------------

Exps = Tuple[int, ...]


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with cyclotomic coefficients.

    When ``has_lambda`` is set, the last exponent slot is the formal
    parameter lambda and does not count towards ``nvars``.
    """

    __slots__ = ("nvars", "has_lambda", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exps, object] = None, has_lambda: bool = False):
        self.nvars = nvars
        self.has_lambda = has_lambda
        arity = nvars + (1 if has_lambda else 0)
        clean: Dict[Exps, Cyclotomic] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != arity:
                raise ValueError("exponent vector has wrong arity")
            c = Cyclotomic.coerce(c)
            if not c.is_zero():
                clean[e] = c
        self.terms = clean

    @property
    def arity(self) -> int:
        return self.nvars + (1 if self.has_lambda else 0)

    @classmethod
    def variable(cls, nvars: int, i: int, has_lambda: bool = False) -> "MultiPoly":
        e = [0] * (nvars + (1 if has_lambda else 0))
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, has_lambda)

    @classmethod
    def constant(cls, nvars: int, c, has_lambda: bool = False) -> "MultiPoly":
        return cls(nvars, {(0,) * (nvars + (1 if has_lambda else 0)): c}, has_lambda)

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars or self.has_lambda != other.has_lambda:
            raise ValueError("incompatible polynomial rings")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.nvars, other, self.has_lambda)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MultiPoly(self.nvars, out, self.has_lambda)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.has_lambda)

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -Cyclotomic.coerce(other))

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Cyclotomic.coerce(other)
            return MultiPoly(self.nvars, {e: v * c for e, v in self.terms.items()}, self.has_lambda)
        self._check(other)
        out: Dict[Exps, Cyclotomic] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return MultiPoly(self.nvars, out, self.has_lambda)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(self.nvars, 1, self.has_lambda)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if (self.nvars, self.has_lambda) != (other.nvars, other.has_lambda):
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def total_degree(self) -> int:
        return max((sum(e[: self.nvars]) for e in self.terms), default=-1)

    def lambda_coefficient(self, k: int) -> "MultiPoly":
        """Coefficient of lambda^k as a lambda-free polynomial."""
        if not self.has_lambda:
            return self if k == 0 else MultiPoly(self.nvars)
        out = {e[:-1]: c for e, c in self.terms.items() if e[-1] == k}
        return MultiPoly(self.nvars, out)

    def lambda_degree(self) -> int:
        if not self.has_lambda:
            return 0
        return max((e[-1] for e in self.terms), default=0)

    def specialize(self, lam) -> "MultiPoly":
        """Substitute a value for lambda."""
        if not self.has_lambda:
            return self
        lam = Cyclotomic.coerce(lam)
        out: Dict[Exps, Cyclotomic] = {}
        for e, c in self.terms.items():
            v = c * (lam ** e[-1])
            key = e[:-1]
            out[key] = out[key] + v if key in out else v
        return MultiPoly(self.nvars, out)

    def derivative(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MultiPoly(self.nvars, out, self.has_lambda)

    def evaluate(self, point: Sequence) -> "MultiPoly":
        """Evaluate the variables; returns a constant (or lambda-polynomial)."""
        pt = [Cyclotomic.coerce(x) for x in point]
        out: Dict[Exps, Cyclotomic] = {}
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e[: self.nvars]):
                if k:
                    v = v * (x ** k)
            key = (0,) * self.nvars + e[self.nvars:]
            out[key] = out[key] + v if key in out else v
        return MultiPoly(self.nvars, out, self.has_lambda)

    def univariate(self) -> List[Cyclotomic]:
        """Coefficient list of a lambda-free polynomial in one variable."""
        if self.nvars != 1 or self.has_lambda:
            raise ValueError("not a univariate lambda-free polynomial")
        deg = self.total_degree()
        coeffs = [Cyclotomic.zero() for _ in range(max(deg, 0) + 1)]
        for e, c in self.terms.items():
            coeffs[e[0]] = c
        return coeffs

    def key(self) -> Tuple:
        """Hashable canonical form (coefficients lifted to a common conductor)."""
        items = sorted(self.terms.items())
        lifted = lift_common([c for _, c in items]) if items else []
        m = lifted[0].m if lifted else 1
        return (self.nvars, self.has_lambda, m, tuple((e, c.coeffs) for (e, _), c in zip(items, lifted)))

    def __repr__(self):
        names = [f"x{i + 1}" for i in range(self.nvars)] + (["lam"] if self.has_lambda else [])
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k)
            parts.append(f"({c!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) or "0"


def poly_restrict(f: MultiPoly, basis: Sequence[Sequence]) -> MultiPoly:
    """Substitute x = sum_k u_k * basis[k]; lambda is carried along."""
    for v in basis:
        if len(v) != f.nvars:
            raise ValueError("basis vector length must match the variable count")
    r = len(basis)
    lin = []
    for i in range(f.nvars):
        terms = {}
        for k, v in enumerate(basis):
            c = Cyclotomic.coerce(v[i])
            if not c.is_zero():
                e = [0] * (r + (1 if f.has_lambda else 0))
                e[k] = 1
                terms[tuple(e)] = c
        lin.append(MultiPoly(r, terms, f.has_lambda))
    out = MultiPoly(r, {}, f.has_lambda)
    for e, c in f.terms.items():
        term = MultiPoly.constant(r, c, f.has_lambda)
        for i, k in enumerate(e[: f.nvars]):
            if k:
                term = term * (lin[i] ** k)
        if f.has_lambda and e[-1]:
            le = [0] * (r + 1)
            le[-1] = e[-1]
            term = term * MultiPoly(r, {tuple(le): 1}, True)
        out = out + term
    return out


def binary_form_root_count(f: MultiPoly) -> int:
    """Distinct points of P^1 cut out by a nonzero lambda-free binary form."""
    if f.nvars != 2 or f.has_lambda:
        raise ValueError("expected a lambda-free binary form")
    if f.is_zero():
        raise ValueError("zero binary form vanishes identically")
    deg = f.total_degree()
    coeffs = [Cyclotomic.zero() for _ in range(deg + 1)]
    for e, c in f.terms.items():
        coeffs[e[0]] = c
    affine = _utrim(coeffs)
    count = univariate_root_count(affine) if len(affine) > 1 else 0
    if len(affine) - 1 < deg:  # the point (1:0) lies on the form
        count += 1
    return count


# ---------------------------------------------------------------------------
# Reduction modulo primes
# ---------------------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def primes_one_mod(m: int, count: int, start: int = 10007) -> List[int]:
    """The first ``count`` primes p >= start with p = 1 (mod m)."""
    out = []
    p = start + ((1 - start) % m)
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p += m
    return out


def primitive_root_of_unity_mod(m: int, p: int) -> int:
    if (p - 1) % m:
        raise ValueError("p must be 1 mod m")
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return pow(g, (p - 1) // m, p)
    raise ValueError("no primitive root found")


def rank_mod_p(rows: List[List[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
    return rank


def _monomials(nvars: int, deg: int) -> List[Exps]:
    if nvars == 1:
        return [(deg,)]
    out = []
    for k in range(deg, -1, -1):
        for rest in _monomials(nvars - 1, deg - k):
            out.append((k,) + rest)
    return out


def ternary_form_is_smooth(f: MultiPoly, primes: int = 3) -> bool:
    """Certify that a lambda-free ternary form of degree d >= 2 defines a
    smooth plane curve.

    The partials have no common zero iff the ideal they generate contains
    every form of degree 3(d-2)+1 (Macaulay bound for three forms of degree
    d-1). Rank only drops under reduction mod p, so full rank modulo some
    prime p = 1 (mod conductor) is a proof. Returns False when no tried
    prime certifies smoothness.
    """
    if f.nvars != 3 or f.has_lambda:
        raise ValueError("expected a lambda-free ternary form")
    d = f.total_degree()
    if d < 2 or any(sum(e) != d for e in f.terms):
        raise ValueError("expected a homogeneous form of degree >= 2")
    partials = [f.derivative(i) for i in range(3)]
    target = 3 * (d - 2) + 1
    shift = target - (d - 1)
    cols = {e: j for j, e in enumerate(_monomials(3, target))}
    m = 1
    for g in partials:
        for c in g.terms.values():
            m = lcm(m, c.m)
    for p in primes_one_mod(m, primes):
        zeta = primitive_root_of_unity_mod(m, p)
        images = [{e: c.lift(m).mod_p(p, zeta) for e, c in g.terms.items()} for g in partials]
        rows = []
        for g in images:
            for mono in _monomials(3, shift):
                row = [0] * len(cols)
                for e, c in g.items():
                    row[cols[tuple(a + b for a, b in zip(e, mono))]] = c
                rows.append(row)
        if rank_mod_p(rows, p) == len(cols):
            return True
    return False
