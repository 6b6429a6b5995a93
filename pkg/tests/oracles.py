"""Independent numerical oracles used by the test suite.

These deliberately avoid the package's exact machinery: matrices are built
with numpy, eigenspaces come from SVD null spaces and restrictions of the
quintic are evaluated in floating point at a fixed generic lambda.
"""

from __future__ import annotations

import cmath

import numpy as np

LAMBDA = 0.3712 + 0.2139j
TOL = 1e-7


def element_matrix(g):
    """Matrix of (g x)_i = xi^(a_sigma(i)) x_sigma(i)."""
    N = g.N
    m = np.zeros((N, N), dtype=complex)
    for i in range(N):
        j = g.perm[i]
        m[i, j] = cmath.exp(2j * cmath.pi * g.twist[j] / N)
    return m


def null_space(a, tol=TOL):
    if a.shape[0] == 0:
        return np.eye(a.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(a)
    rank = int((s > tol * max(1.0, s[0] if len(s) else 1.0)).sum())
    return vh[rank:].conj().T


def eigenspaces(m):
    """Bases (as column matrices) of the eigenspaces of a finite-order matrix."""
    vals = np.linalg.eigvals(m)
    angles = sorted({round((cmath.phase(v) / (2 * cmath.pi)) % 1.0 * 3600) % 3600 for v in vals})
    out = []
    for a in angles:
        lam = cmath.exp(2j * cmath.pi * a / 3600)
        out.append(null_space(m - lam * np.eye(len(m))))
    return out


def intersect(u, w):
    if u.shape[1] == 0 or w.shape[1] == 0:
        return np.zeros((u.shape[0], 0), dtype=complex)
    k = null_space(np.hstack([u, -w]))
    if k.shape[1] == 0:
        return np.zeros((u.shape[0], 0), dtype=complex)
    basis = u @ k[: u.shape[1]]
    q, r = np.linalg.qr(basis)
    return q[:, : k.shape[1]]


def quintic(x, lam=LAMBDA):
    return np.sum(x ** 5) - 5 * lam * np.prod(x)


def _binary_roots(u, v):
    """Distinct roots on the line spanned by u, v (None if the line lies on X)."""
    ts = np.exp(2j * np.pi * np.arange(8) / 8) * 1.3
    vals = np.array([quintic(u + t * v) for t in ts])
    coeffs = np.linalg.lstsq(np.vander(ts, 6), vals, rcond=None)[0]
    if np.max(np.abs(coeffs)) < 1e-9:
        return None
    count = 0
    if abs(coeffs[0]) < 1e-9:  # root at t = infinity
        count += 1
        coeffs = np.trim_zeros(np.where(np.abs(coeffs) < 1e-9, 0, coeffs), "f")
    roots = np.roots(coeffs)
    distinct = []
    for r in roots:
        if all(abs(r - d) > 1e-4 for d in distinct):
            distinct.append(r)
    return count + len(distinct)


def euler_of_subspace_section(basis):
    """chi(X cap P(V)) for a linear subspace V given by orthonormal columns.

    Plane sections are assumed to be smooth quintic curves unless they lie
    entirely on X.
    """
    k = basis.shape[1]
    if k == 0:
        return 0
    if k == 1:
        return int(abs(quintic(basis[:, 0])) < 1e-9)
    if k == 2:
        n = _binary_roots(basis[:, 0], basis[:, 1])
        return 2 if n is None else n
    if k == 3:
        rng = np.random.default_rng(1)
        pts = [basis @ (rng.normal(size=3) + 1j * rng.normal(size=3)) for _ in range(4)]
        if all(abs(quintic(p)) < 1e-9 for p in pts):
            return 3
        return -10
    if k == 5:
        return -200
    raise ValueError(f"unexpected {k}-dimensional common eigenspace")


def fixed_locus_euler(mats):
    """chi of the common fixed locus in X of projective transformations."""
    spaces = [np.eye(5, dtype=complex)]
    for m in mats:
        eig = eigenspaces(m)
        spaces = [s for s in (intersect(a, b) for a in spaces for b in eig) if s.shape[1]]
    return sum(euler_of_subspace_section(s) for s in spaces)


def orbifold_euler(G):
    """(1/|G|) sum over commuting pairs of chi(X^<g,h>): the Euler number of a
    crepant resolution of X/G, equal to 2 (h11 - h21)."""
    mats = {g: element_matrix(g) for g in G.elements}
    eig = {g: eigenspaces(mats[g]) for g in G.elements}
    total = 0
    for g in G.elements:
        for h in G.elements:
            if g * h != h * g:
                continue
            if g.is_identity() or h.is_identity():
                x = h if g.is_identity() else g
                if x.is_identity():
                    total += -200
                    continue
                total += sum(euler_of_subspace_section(s) for s in eig[x])
                continue
            spaces = [s for s in (intersect(a, b) for a in eig[g] for b in eig[h]) if s.shape[1]]
            total += sum(euler_of_subspace_section(s) for s in spaces)
    if total % G.order:
        raise ArithmeticError(f"non-integral orbifold Euler number {total}/{G.order}")
    return total // G.order


def lefschetz_p12(G):
    """Invariant h^{2,1} from the Lefschetz formula with numerically computed
    fixed-locus Euler numbers."""
    total = 0
    for g in G.elements:
        if g.is_identity():
            total += -200
        else:
            total += fixed_locus_euler([element_matrix(g)])
    return 1 - total // (2 * G.order)


def _preserves(m, basis):
    img = m @ basis
    resid = img - basis @ (basis.conj().T @ img)
    return np.max(np.abs(resid)) < 1e-7


def _same_space(u, w):
    return u.shape == w.shape and np.max(np.abs(w - u @ (u.conj().T @ w))) < 1e-7


def curve_quotient_genus(basis, stabilizer_mats):
    """Genus of C / K for the plane curve C = X cap P(V) as the dimension of
    the K-invariant holomorphic differentials. H^{1,0}(C) is spanned by the
    residues of A * Omega / f with A a quadric, so an element acting by B
    with f(B y) = c f(y) has trace det(B) / c * h_2(B)."""
    rng = np.random.default_rng(7)
    total = 0
    for m in stabilizer_mats:
        b = basis.conj().T @ m @ basis
        y = rng.normal(size=3) + 1j * rng.normal(size=3)
        c = quintic(basis @ (b @ y)) / quintic(basis @ y)
        tr = (np.trace(b) ** 2 + np.trace(b @ b)) / 2
        total += np.linalg.det(b) / c * tr
    g = total / len(stabilizer_mats)
    if abs(g - round(g.real)) > 1e-6:
        raise ArithmeticError(f"non-integral quotient genus {g}")
    return int(round(g.real))


def twisted_h21(G, classes):
    """Sum over class representatives s of the quotient genera of the curves
    fixed by s (each such curve sector has age 1).

    ``classes`` is a list of (representative, centralizer elements)."""
    total = 0
    for s, cent in classes:
        if s.is_identity():
            continue
        mats = {h: element_matrix(h) for h in cent}
        curves = []
        for v in eigenspaces(mats[s]):
            if v.shape[1] == 3 and euler_of_subspace_section(v) == -10:
                curves.append(v)
        seen = []
        for v in curves:
            if any(_same_space(w, v) for w in seen):
                continue
            orbit = [mats[h] @ v for h in cent]
            seen.extend(orbit)
            stab = [mats[h] for h in cent if _preserves(mats[h], v)]
            total += curve_quotient_genus(v, stab)
    return total


def orbifold_euler_by_classes(classes):
    """Same sum grouped by conjugacy classes: sum over representatives s of
    (1/|C(s)|) sum over h in C(s) of chi(X^<s,h>).

    ``classes`` is a list of (representative, centralizer elements)."""
    total = 0.0
    for s, cent in classes:
        eig_s = [np.eye(5, dtype=complex)] if s.is_identity() else eigenspaces(element_matrix(s))
        sub = 0
        for h in cent:
            if s.is_identity() and h.is_identity():
                sub += -200
                continue
            eig_h = [np.eye(5, dtype=complex)] if h.is_identity() else eigenspaces(element_matrix(h))
            spaces = [w for w in (intersect(a, b) for a in eig_s for b in eig_h) if w.shape[1]]
            sub += sum(euler_of_subspace_section(w) for w in spaces)
        total += sub / len(cent)
    if abs(total - round(total)) > 1e-9:
        raise ArithmeticError(f"non-integral orbifold Euler number {total}")
    return int(round(total))
