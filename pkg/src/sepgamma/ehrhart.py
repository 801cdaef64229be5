"""Ground-truth h*-polynomials by exact lattice-point counting.

Builds the V-representation of a symmetric edge polytope (type A or B),
rewrites it in a basis of its affine-hull lattice so it becomes
full-dimensional without changing any dilate's point count, derives the
facet inequalities by brute-force hyperplane enumeration, counts
|tP n Z^d| for t = 1..d+1 by scanning the bounding box, and applies the
binomial transform.  Everything is integer arithmetic; nothing floats.

This oracle exists to validate the formula paths at desk scale, never to
be fast; every stage has a loud resource guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .errors import BoundExceededError, PreconditionError, VerificationError
from .graphs import Graph
from .polynomials import Poly

MAX_HREP_DIM = 7
MAX_HREP_POINTS = 64
MAX_BOX_POINTS = 10 ** 9


@dataclass
class LatticePolytope:
    """V-representation plus derived data.  `points` may contain non-vertex
    points (the hull ignores them); `lattice_basis` rows span exactly the
    ambient lattice intersected with the linear span of the translated
    affine hull; `hrep` is filled by h_representation."""

    ambient_dim: int
    points: tuple
    dim: int
    lattice_basis: tuple
    hrep: Optional[tuple] = field(default=None)


# ---------------------------------------------------------------------------
# Integer linear algebra
# ---------------------------------------------------------------------------

def _integer_kernel(rows: list, n: int) -> list:
    """Basis of {x in Z^n : r . x = 0 for every r in rows}, via unimodular
    row reduction of the augmented transpose; the result is saturated."""
    k = len(rows)
    aug = []
    for i in range(n):
        left = [rows[r][i] for r in range(k)]
        right = [1 if j == i else 0 for j in range(n)]
        aug.append(left + right)
    r0 = 0
    for c in range(k):
        while True:
            nz = [r for r in range(r0, n) if aug[r][c] != 0]
            if not nz:
                break
            if len(nz) == 1:
                r = nz[0]
                aug[r0], aug[r] = aug[r], aug[r0]
                r0 += 1
                break
            piv = min(nz, key=lambda r: abs(aug[r][c]))
            for r in nz:
                if r == piv:
                    continue
                q = aug[r][c] // aug[piv][c]
                if q:
                    aug[r] = [a - q * b for a, b in zip(aug[r], aug[piv])]
    return [row[k:] for row in aug[r0:]]


def _affine_lattice_basis(points: list) -> list:
    """Basis of Z^n intersected with the linear span of (p - points[0])."""
    n = len(points[0])
    p0 = points[0]
    diffs = [[p[i] - p0[i] for i in range(n)] for p in points[1:]]
    normals = _integer_kernel(diffs, n)
    return _integer_kernel(normals, n)


def _solve_integer_coords(basis: list, x: list) -> list:
    """c with sum_i c_i basis[i] = x; exact, must come out integral."""
    d, n = len(basis), len(x)
    # Gaussian elimination on the n x d system (columns = basis vectors)
    mat = [[Fraction(basis[j][i]) for j in range(d)] + [Fraction(x[i])]
           for i in range(n)]
    row = 0
    pivots = []
    for col in range(d):
        sel = next((r for r in range(row, n) if mat[r][col] != 0), None)
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        pv = mat[row][col]
        mat[row] = [v / pv for v in mat[row]]
        for r in range(n):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    c = [Fraction(0)] * d
    for r, col in enumerate(pivots):
        c[col] = mat[r][d]
    for r in range(row, n):
        if mat[r][d] != 0:
            raise VerificationError("point outside the affine-hull lattice")
    out = []
    for v in c:
        if v.denominator != 1:
            raise VerificationError("non-integral lattice coordinate")
        out.append(int(v))
    return out


def _int_det(mat: list) -> int:
    """Bareiss fraction-free determinant of a small integer matrix."""
    m = [row[:] for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            sel = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if sel is None:
                return 0
            m[k], m[sel] = m[sel], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _cross_normal(diffs: list, d: int) -> tuple:
    """Integer normal to d-1 vectors in Z^d (generalized cross product)."""
    out = []
    for i in range(d):
        minor = [[row[j] for j in range(d) if j != i] for row in diffs]
        out.append((-1) ** i * _int_det(minor))
    return tuple(out)


# ---------------------------------------------------------------------------
# Building and reducing
# ---------------------------------------------------------------------------

def build_a(g: Graph) -> LatticePolytope:
    """conv of +-(e_i - e_j) over the edges; lives in the sum-zero
    hyperplane, dimension n-1 for connected g."""
    if not g.edges:
        raise PreconditionError("type-A polytope of an edgeless graph is empty")
    pts = []
    for u, v in g.sorted_edges():
        p = [0] * g.n
        p[u - 1], p[v - 1] = 1, -1
        pts.append(tuple(p))
        pts.append(tuple(-x for x in p))
    basis = _affine_lattice_basis(pts)
    return LatticePolytope(g.n, tuple(pts), len(basis),
                           tuple(tuple(b) for b in basis))


def build_b(g: Graph) -> LatticePolytope:
    """conv of all +-e_i plus +-e_i +- e_j over the edges; always
    full-dimensional."""
    if g.n < 1:
        raise PreconditionError("need at least one vertex")
    pts = []
    for i in range(1, g.n + 1):
        p = [0] * g.n
        p[i - 1] = 1
        pts.append(tuple(p))
        pts.append(tuple(-x for x in p))
    for u, v in g.sorted_edges():
        for su, sv in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            p = [0] * g.n
            p[u - 1], p[v - 1] = su, sv
            pts.append(tuple(p))
    basis = _affine_lattice_basis(pts)
    return LatticePolytope(g.n, tuple(pts), len(basis),
                           tuple(tuple(b) for b in basis))


def reduce_to_full_dim(p: LatticePolytope) -> LatticePolytope:
    """Rewrite the points in lattice-basis coordinates relative to the first
    point.  The map bijects affine-hull lattice points, so every dilate's
    count is preserved.  Full-dimensional input comes back unchanged."""
    if p.dim == p.ambient_dim:
        return p
    basis = [list(b) for b in p.lattice_basis]
    p0 = p.points[0]
    new_pts = []
    for pt in p.points:
        x = [a - b for a, b in zip(pt, p0)]
        new_pts.append(tuple(_solve_integer_coords(basis, x)))
    d = p.dim
    ident = tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))
    return LatticePolytope(d, tuple(new_pts), d, ident)


# ---------------------------------------------------------------------------
# Facets
# ---------------------------------------------------------------------------

def h_representation(p: LatticePolytope, max_dim: int = MAX_HREP_DIM,
                     max_points: int = MAX_HREP_POINTS) -> tuple:
    """Irredundant facet list [(normal, offset)] with primitive integer
    normals, meaning normal . x <= offset; brute force over hyperplanes
    spanned by d affinely independent points.  Caches into p.hrep."""
    if p.dim != p.ambient_dim:
        raise PreconditionError("reduce to full dimension before facets")
    d = p.dim
    if d > max_dim:
        raise BoundExceededError(f"facet enumeration in dimension {d} > {max_dim}")
    pts = sorted(set(p.points))
    if len(pts) > max_points:
        raise BoundExceededError(f"{len(pts)} points > {max_points}")
    facets = set()
    seen = set()
    for subset in combinations(pts, d):
        x0 = subset[0]
        diffs = [[subset[i][j] - x0[j] for j in range(d)] for i in range(1, d)]
        normal = _cross_normal(diffs, d)
        if not any(normal):
            continue
        g = 0
        for v in normal:
            g = math.gcd(g, v)
        normal = tuple(v // g for v in normal)
        offset0 = sum(a * b for a, b in zip(normal, x0))
        neg = tuple(-v for v in normal)
        key = max((normal, offset0), (neg, -offset0))
        if key in seen:
            continue
        seen.add(key)
        dots = [sum(a * b for a, b in zip(normal, q)) for q in pts]
        if max(dots) == offset0:
            facets.add((normal, offset0))
        if min(dots) == offset0:
            facets.add((neg, -offset0))
    out = tuple(sorted(facets))
    p.hrep = out
    return out


# ---------------------------------------------------------------------------
# Counting and the h* transform
# ---------------------------------------------------------------------------

def count_points(p: LatticePolytope, t: int, budget: int = MAX_BOX_POINTS) -> int:
    """|tP n Z^d| by scanning the bounding box of tP: iterate the first d-1
    coordinates, solve the last one as an exact integer interval from the
    facet inequalities."""
    if p.hrep is None:
        raise PreconditionError("h-representation not computed")
    d = p.dim
    if d == 0:
        return 1
    lo = [t * min(q[i] for q in p.points) for i in range(d)]
    hi = [t * max(q[i] for q in p.points) for i in range(d)]
    vol = 1
    for a, b in zip(lo, hi):
        vol *= (b - a + 1)
        if vol > budget:
            raise BoundExceededError(f"bounding box of {t}P exceeds {budget} points")
    facets = [(f[0], t * f[1]) for f in p.hrep]
    count = 0
    for prefix in product(*(range(lo[i], hi[i] + 1) for i in range(d - 1))):
        lo_x, hi_x = lo[d - 1], hi[d - 1]
        feasible = True
        for normal, b in facets:
            partial = sum(a * x for a, x in zip(normal, prefix))
            a_last = normal[d - 1]
            rhs = b - partial
            if a_last == 0:
                if rhs < 0:
                    feasible = False
                    break
            elif a_last > 0:
                hi_x = min(hi_x, rhs // a_last)
            else:
                lo_x = max(lo_x, _ceil_div(rhs, a_last))
            if lo_x > hi_x:
                feasible = False
                break
        if feasible and hi_x >= lo_x:
            count += hi_x - lo_x + 1
    return count


def _ceil_div(p: int, q: int) -> int:
    """ceil(p/q) for q != 0, exact."""
    return -((-p) // q) if q > 0 else -(p // (-q))


@dataclass(frozen=True)
class EhrhartData:
    """Dilate counts L(0..d+1) and the h*-polynomial they determine."""
    counts: tuple
    hstar: Poly


def hstar_from_counts(counts, d: int) -> Poly:
    """h*_k = sum_j (-1)^j C(d+1, j) L(k-j); checks nonnegativity and that
    the resulting Ehrhart form reproduces L(d+1)."""
    if len(counts) < d + 2 or counts[0] != 1:
        raise PreconditionError("need counts L(0)=1 .. L(d+1)")
    h = []
    for k in range(d + 1):
        v = sum((-1) ** j * math.comb(d + 1, j) * counts[k - j]
                for j in range(k + 1))
        if v < 0:
            raise VerificationError(
                f"negative h*_{k} = {v}: counting bug or wrong dimension")
        h.append(v)
    predicted = sum(h[k] * math.comb(2 * d + 1 - k, d) for k in range(d + 1))
    if predicted != counts[d + 1]:
        raise VerificationError(
            f"h* does not reproduce L({d + 1}): {predicted} != {counts[d + 1]}")
    return Poly(h)


def reflexivity_check(hstar: Poly, d: int) -> bool:
    """Reflexive iff h* is palindromic of degree exactly d."""
    return hstar.degree == d and hstar.is_palindromic()


def ehrhart_data(p: LatticePolytope, max_dim: int = MAX_HREP_DIM,
                 max_points: int = MAX_HREP_POINTS,
                 budget: int = MAX_BOX_POINTS) -> EhrhartData:
    """Full oracle pipeline: reduce, facets, count t = 1..d+1, transform."""
    q = reduce_to_full_dim(p)
    if q.hrep is None:
        h_representation(q, max_dim, max_points)
    counts = [1] + [count_points(q, t, budget) for t in range(1, q.dim + 2)]
    return EhrhartData(tuple(counts), hstar_from_counts(counts, q.dim))


def oracle_hstar_a(g: Graph, **kw) -> EhrhartData:
    return ehrhart_data(build_a(g), **kw)


def oracle_hstar_b(g: Graph, **kw) -> EhrhartData:
    return ehrhart_data(build_b(g), **kw)
