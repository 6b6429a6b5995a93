"""Integer matrices: Smith normal form with unimodular transforms, integer
kernels, exact determinants and signatures of symmetric forms.

Matrices are plain lists of lists of Python ints (arbitrary precision).
All routines are exact; no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

IntMatrix = List[List[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(r) for r in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def bilinear(gram: Sequence[Sequence], x: Sequence, y: Sequence):
    return sum(xi * g * yj for xi, row in zip(x, gram) for g, yj in zip(row, y) if xi and g and yj)


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ..."""

    D: Tuple[Tuple[int, ...], ...]
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]

    @property
    def diagonal(self) -> List[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> List[int]:
        """Nonzero diagonal entries different from 1."""
        return [d for d in self.diagonal if d not in (0, 1)]


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(map(int, r)) for r in a]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):  # row_dst += c * row_src
        if c:
            m[dst] = [x + c * y for x, y in zip(m[dst], m[src])]
            u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        if c:
            for r in m:
                r[dst] += c * r[src]
            for r in v:
                r[dst] += c * r[src]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = m[t][t]
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    add_row(t, i, -(m[i][t] // p))
                    if m[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    add_col(t, j, -(m[t][j] // p))
                    if m[t][j]:
                        done = False
            if done:
                # divisibility of the rest of the block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest entry of row/column t to the pivot
            cand = [(abs(m[i][t]), i, t) for i in range(t, rows) if m[i][t]]
            cand += [(abs(m[t][j]), t, j) for j in range(t, cols) if m[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithForm(
        D=tuple(tuple(r) for r in m), U=tuple(tuple(r) for r in u), V=tuple(tuple(r) for r in v)
    )


def integer_kernel(a: Sequence[Sequence[int]], ncols: int = None) -> IntMatrix:
    """Z-basis (as columns, returned as a list of vectors) of {x : A x = 0}.

    The result is saturated: it is a basis of the full kernel lattice.
    """
    if not a:
        n = ncols or 0
        return [[int(i == j) for i in range(n)] for j in range(n)]
    snf = smith_normal_form(a)
    diag = snf.diagonal
    cols = len(a[0])
    vt = transpose(snf.V)
    return [list(vt[j]) for j in range(cols) if j >= len(diag) or diag[j] == 0]


def rational_solve(a: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def rational_inverse(a: Sequence[Sequence]) -> List[List[Fraction]]:
    n = len(a)
    cols = [rational_solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return transpose(cols)


def signature(gram: Sequence[Sequence]) -> Tuple[int, int]:
    """(positive, negative) inertia of a symmetric rational matrix, exactly,
    by symmetric Gaussian elimination (congruence)."""
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # replace e_i by e_i + e_j: a nonzero diagonal appears
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            if m[i][i] == 0:  # char 0: m_ii becomes 2 m_ij != 0
                raise ArithmeticError("unexpected zero pivot")
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = m[i][piv] / d
            if f:
                for k in active:
                    m[i][k] -= f * m[piv][k]
        for i in active:
            m[piv][i] = m[i][piv] = Fraction(0)
    return pos, neg
