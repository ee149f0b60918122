"""Convex polytopes with dual vertex/halfspace representations.

This module is the numeric substrate for everything else: convex
bodies in dimensions 1-3 carrying both a vertex list and an
irredundant H-representation, convex hulls (own monotone chain in 2D,
Qhull via scipy in 3D with coplanar-facet merging), exact vertex
enumeration of halfspace systems, support functions, Minkowski sums of
polygons, central symmetrals, gauge norms, and Hausdorff distances.

Conventions:

* Halfspaces are written ``normal . x <= offset`` with unit normals.
* Vertex lists are stored in lexicographic order (the canonical order
  used for serialization); 2D bodies expose a counterclockwise cycle
  via :meth:`ConvexBody.ccw_vertices`.
* Set equality always means Hausdorff distance below the configured
  ``eps_set``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull as _SciPyHull
from scipy.spatial import QhullError as _QhullError

from . import lp
from .tolerances import DEFAULT_TOL, ToleranceConfig

__all__ = [
    "Halfspace",
    "ConvexBody",
    "HullResult",
    "VertexEnumeration",
    "convex_hull_any",
    "vertex_enumeration",
    "lp_min",
    "support",
    "minkowski_sum_2d",
    "central_symmetral",
    "gauge_norm",
    "c_distance",
    "diam_C",
    "min_norm_point",
    "distance_point_to_hull",
    "hausdorff_distance",
    "hausdorff_points",
    "dedupe_points",
]


@dataclass(frozen=True)
class Halfspace:
    """The closed halfspace ``{x : normal . x <= offset}``."""

    normal: np.ndarray
    offset: float

    def __post_init__(self) -> None:
        n = np.asarray(self.normal, dtype=float).ravel()
        norm = np.linalg.norm(n)
        if not norm > 0:
            raise ValueError("halfspace normal must be nonzero")
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def dim(self) -> int:
        return self.normal.shape[0]

    def normalized(self) -> "Halfspace":
        norm = np.linalg.norm(self.normal)
        return Halfspace(self.normal / norm, self.offset / norm)


def as_matrix(halfspaces, dim: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Stack halfspaces (or pass through an ``(A, b)`` pair) as arrays."""
    if isinstance(halfspaces, tuple) and len(halfspaces) == 2:
        A = np.atleast_2d(np.asarray(halfspaces[0], dtype=float))
        b = np.asarray(halfspaces[1], dtype=float).ravel()
    else:
        hs = list(halfspaces)
        if not hs:
            raise ValueError("empty halfspace list")
        A = np.vstack([h.normal for h in hs])
        b = np.array([h.offset for h in hs], dtype=float)
    if dim is not None and A.shape[1] != dim:
        raise ValueError(f"halfspace dimension {A.shape[1]} != expected {dim}")
    return A, b


def dedupe_points(points: np.ndarray, eps: float) -> np.ndarray:
    """Merge points that coincide within ``eps`` (max-norm), keeping the
    lexicographically first representative of each cluster."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[0] <= 1:
        return pts.copy()
    order = np.lexsort(pts.T[::-1])
    pts = pts[order]
    reps: list[np.ndarray] = []
    for p in pts:
        if not any(np.max(np.abs(p - r)) <= eps for r in reps):
            reps.append(p)
    return np.array(reps)


def _lex_sorted(points: np.ndarray) -> np.ndarray:
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    return pts[np.lexsort(pts.T[::-1])]


# ---------------------------------------------------------------------------
# Convex hulls


def hull_2d(points: np.ndarray, eps: float = 1e-9) -> np.ndarray:
    """Counterclockwise convex hull cycle of a full-dimensional planar
    point set (Andrew's monotone chain).

    Collinear intermediate points are dropped; the cycle starts at the
    lexicographically smallest vertex.
    """
    pts = dedupe_points(points, eps)
    pts = pts[np.lexsort(pts.T[::-1])]
    if pts.shape[0] < 3:
        raise ValueError("need at least 3 distinct points for a 2D hull")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def turn_eps(o, a, b):
        # Relative collinearity threshold.
        scale = max(1.0, np.linalg.norm(a - o) * np.linalg.norm(b - o))
        return eps * scale

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= turn_eps(
            lower[-2], lower[-1], p
        ):
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= turn_eps(
            upper[-2], upper[-1], p
        ):
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:
        raise ValueError("points are collinear; no full-dimensional 2D hull")
    return np.array(cycle)


def _merge_qhull_facets(
    A: np.ndarray, b: np.ndarray, eps: float
) -> tuple[np.ndarray, np.ndarray]:
    """Collapse Qhull's simplicial facets into geometric facets by
    grouping (near-)identical supporting hyperplanes."""
    m = A.shape[0]
    scale = max(1.0, float(np.max(np.abs(b))))
    used = np.zeros(m, dtype=bool)
    keep: list[int] = []
    for i in range(m):
        if used[i]:
            continue
        same = (np.max(np.abs(A - A[i]), axis=1) <= 1e-7) & (
            np.abs(b - b[i]) <= 1e-7 * scale
        )
        used |= same
        keep.append(i)
    return A[keep], b[keep]


def _hull_3d(points: np.ndarray, eps: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """3D convex hull: vertex subset + merged irredundant facets."""
    try:
        hull = _SciPyHull(points)
    except _QhullError as exc:  # pragma: no cover - guarded by rank checks
        raise ValueError(f"3D hull failed (degenerate input?): {exc}") from exc
    verts = points[hull.vertices]
    A = hull.equations[:, :3]
    b = -hull.equations[:, 3]
    A, b = _merge_qhull_facets(A, b, eps)
    # Re-tighten offsets against the actual vertices so every vertex
    # satisfies the H-representation exactly up to roundoff.
    b = np.max(verts @ A.T, axis=0)
    return verts, A, b


@dataclass
class HullResult:
    """Convex hull of an arbitrary finite point set.

    ``affine_dim`` may be smaller than the ambient dimension, in which
    case ``body`` is None and ``extremes`` lists the extreme points of
    the hull inside its affine hull (described by ``origin`` +
    ``basis``).
    """

    extremes: np.ndarray
    affine_dim: int
    origin: np.ndarray
    basis: np.ndarray  # (affine_dim, ambient_dim), orthonormal rows
    body: "ConvexBody | None"

    @property
    def is_full_dimensional(self) -> bool:
        return self.body is not None


def convex_hull_any(points: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> HullResult:
    """Convex hull of any finite point set, degenerate sets included."""
    pts = dedupe_points(points, tol.eps_geom)
    dim = pts.shape[1]
    origin = pts.mean(axis=0)
    centered = pts - origin
    scale = max(1.0, float(np.max(np.abs(centered))) if pts.shape[0] else 1.0)
    if pts.shape[0] == 1:
        return HullResult(pts.copy(), 0, origin, np.zeros((0, dim)), None)
    _, s, vt = np.linalg.svd(centered, full_matrices=False)
    rank_eps = max(tol.eps_geom, 1e-12 * scale) * 10.0
    rank = int(np.sum(s > rank_eps * math.sqrt(pts.shape[0])))
    if rank == 0:
        return HullResult(pts[:1].copy(), 0, origin, np.zeros((0, dim)), None)
    basis = vt[:rank]
    if rank < dim:
        proj = centered @ basis.T
        sub = convex_hull_any(proj, tol)
        world = sub.extremes @ basis + origin
        return HullResult(_lex_sorted(world), rank, origin, basis, None)
    body = ConvexBody.from_vertices(pts, tol=tol)
    return HullResult(body.vertices, dim, origin, np.eye(dim), body)


# ---------------------------------------------------------------------------
# ConvexBody


class ConvexBody:
    """A full-dimensional convex polytope with consistent V- and
    H-representations.

    Construct via :meth:`from_vertices` or :meth:`from_halfspaces`.
    Vertices are canonicalized to lexicographic order; facet normals
    are unit vectors.
    """

    __slots__ = ("dim", "vertices", "A", "b", "_cache")

    def __init__(self, dim: int, vertices: np.ndarray, A: np.ndarray, b: np.ndarray):
        self.dim = int(dim)
        self.vertices = np.asarray(vertices, dtype=float)
        self.A = np.asarray(A, dtype=float)
        self.b = np.asarray(b, dtype=float)
        self._cache: dict = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_vertices(
        cls, points: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL
    ) -> "ConvexBody":
        pts = dedupe_points(points, tol.eps_geom)
        if pts.ndim != 2:
            raise ValueError("points must be a 2D array")
        dim = pts.shape[1]
        if dim == 1:
            lo, hi = float(pts.min()), float(pts.max())
            if hi - lo <= tol.eps_geom:
                raise ValueError("1D body needs two distinct endpoints")
            verts = np.array([[lo], [hi]])
            A = np.array([[-1.0], [1.0]])
            b = np.array([-lo, hi])
            return cls(1, verts, A, b)
        if dim == 2:
            cycle = hull_2d(pts, tol.eps_geom)
            edges = np.roll(cycle, -1, axis=0) - cycle
            normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
            norms = np.linalg.norm(normals, axis=1)
            normals /= norms[:, None]
            offsets = np.einsum("ij,ij->i", normals, cycle)
            body = cls(2, _lex_sorted(cycle), normals, offsets)
            body._cache["ccw"] = cycle
            return body
        if dim == 3:
            centered = pts - pts.mean(axis=0)
            s = np.linalg.svd(centered, compute_uv=False)
            if s.size < 3 or s[2] <= max(tol.eps_geom * 10, 1e-12) * math.sqrt(
                pts.shape[0]
            ) * max(1.0, s[0]) / max(1.0, s[0]):
                if s.size < 3 or s[2] <= 1e-9 * max(1.0, s[0]):
                    raise ValueError("points are not full-dimensional in 3D")
            verts, A, b = _hull_3d(pts, tol.eps_geom)
            norms = np.linalg.norm(A, axis=1)
            A = A / norms[:, None]
            b = b / norms
            return cls(3, _lex_sorted(verts), A, b)
        if dim == 4:
            # Only hull construction is supported in 4D (used by the
            # dimension-free membership tests); vertex enumeration of
            # halfspace systems stays <= 3D.
            hull = _SciPyHull(pts)
            verts = pts[hull.vertices]
            A = hull.equations[:, :4]
            b = -hull.equations[:, 4]
            A, b = _merge_qhull_facets(A, b, tol.eps_geom)
            b = np.max(verts @ A.T, axis=0)
            return cls(4, _lex_sorted(verts), A, b)
        raise ValueError(f"unsupported dimension {dim}")

    @classmethod
    def from_halfspaces(
        cls, halfspaces, tol: ToleranceConfig = DEFAULT_TOL
    ) -> "ConvexBody":
        """Build a bounded full-dimensional body from halfspaces.

        Raises ValueError if the intersection is empty, unbounded, or
        lower-dimensional; use :func:`vertex_enumeration` to handle
        those outcomes as data.
        """
        enum = vertex_enumeration(halfspaces, tol=tol)
        if enum.status != "body":
            raise ValueError(f"halfspace intersection is {enum.status}, not a body")
        assert enum.body is not None
        return enum.body

    # -- basic queries -----------------------------------------------------

    @property
    def halfspaces(self) -> list[Halfspace]:
        return [Halfspace(a.copy(), float(o)) for a, o in zip(self.A, self.b)]

    def support(self, u: np.ndarray) -> float:
        u = np.asarray(u, dtype=float).ravel()
        if u.shape[0] != self.dim:
            raise ValueError("direction dimension mismatch")
        return float(np.max(self.vertices @ u))

    def support_point(self, u: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
        """A vertex attaining the support value (lexicographically
        smallest among near-ties, for determinism)."""
        u = np.asarray(u, dtype=float).ravel()
        vals = self.vertices @ u
        best = np.max(vals)
        cands = self.vertices[vals >= best - tol.eps_geom * max(1.0, abs(best))]
        return _lex_sorted(cands)[0].copy()

    def contains(self, p: np.ndarray, eps: float = 1e-9) -> bool:
        p = np.asarray(p, dtype=float).ravel()
        return bool(np.all(self.A @ p <= self.b + eps))

    def contains_points(self, pts: np.ndarray, eps: float = 1e-9) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        return np.all(pts @ self.A.T <= self.b + eps, axis=1)

    def strictly_contains(self, p: np.ndarray, eps: float = 1e-9) -> bool:
        p = np.asarray(p, dtype=float).ravel()
        return bool(np.all(self.A @ p <= self.b - eps))

    def contains_body(self, other: "ConvexBody", eps: float = 1e-9) -> bool:
        return bool(np.all(self.contains_points(other.vertices, eps)))

    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    # -- transforms --------------------------------------------------------

    def translate(self, v: np.ndarray) -> "ConvexBody":
        v = np.asarray(v, dtype=float).ravel()
        return ConvexBody(self.dim, self.vertices + v, self.A.copy(), self.b + self.A @ v)

    def scale(self, t: float) -> "ConvexBody":
        """Image under ``x -> t x`` (t != 0)."""
        if t == 0:
            raise ValueError("scale factor must be nonzero")
        if t > 0:
            return ConvexBody(self.dim, _lex_sorted(self.vertices * t), self.A.copy(), self.b * t)
        return ConvexBody(self.dim, _lex_sorted(self.vertices * t), -self.A, self.b * (-t))

    def reflect(self) -> "ConvexBody":
        """The reflection -C through the origin."""
        return self.scale(-1.0)

    def homothet(self, ratio: float, translation: np.ndarray) -> "ConvexBody":
        """``translation + ratio * C`` for ratio > 0."""
        if ratio <= 0:
            raise ValueError("homothety ratio must be positive")
        return self.scale(ratio).translate(translation)

    # -- 2D helpers --------------------------------------------------------

    def ccw_vertices(self) -> np.ndarray:
        """Counterclockwise vertex cycle (2D only), starting at the
        lexicographically smallest vertex."""
        if self.dim != 2:
            raise ValueError("ccw_vertices is 2D-only")
        cached = self._cache.get("ccw")
        if cached is None:
            cached = hull_2d(self.vertices)
            self._cache["ccw"] = cached
        start = int(np.lexsort(cached.T[::-1])[0])
        return np.roll(cached, -start, axis=0)

    def area(self) -> float:
        """2D area (shoelace) or 3D volume."""
        if self.dim == 2:
            cyc = self.ccw_vertices()
            x, y = cyc[:, 0], cyc[:, 1]
            return float(
                0.5 * np.abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
            )
        if self.dim == 3:
            key = "volume"
            if key not in self._cache:
                self._cache[key] = float(_SciPyHull(self.vertices).volume)
            return self._cache[key]
        raise ValueError("area/volume supported in 2D/3D only")

    # -- incidence ---------------------------------------------------------

    def incidence(self, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
        """Facet x vertex incidence matrix (True where tight)."""
        key = "incidence"
        if key not in self._cache:
            scale = max(1.0, float(np.max(np.abs(self.b))))
            slack = np.abs(self.vertices @ self.A.T - self.b)
            self._cache[key] = (slack <= 1e-7 * scale).T
        return self._cache[key]

    # -- distances ---------------------------------------------------------

    def distance_to_point(self, p: np.ndarray) -> float:
        p = np.asarray(p, dtype=float).ravel()
        if self.contains(p):
            return 0.0
        if self.dim == 2:
            return float(self.distances_to_points(p[None, :])[0])
        x, dist = min_norm_point(self.vertices - p)
        return dist

    def distances_to_points(self, pts: np.ndarray) -> np.ndarray:
        """Euclidean distances of many points to this body (vectorized
        in 2D; per-point in 3D)."""
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        if self.dim == 2:
            inside = self.contains_points(pts)
            out = np.zeros(pts.shape[0])
            if np.all(inside):
                return out
            cyc = self.ccw_vertices()
            seg_a = cyc
            seg_b = np.roll(cyc, -1, axis=0)
            d = _points_segments_distance(pts[~inside], seg_a, seg_b)
            out[~inside] = d
            return out
        return np.array([self.distance_to_point(p) for p in pts])

    def __repr__(self) -> str:  # pragma: no cover
        return (
            f"ConvexBody(dim={self.dim}, vertices={self.vertices.shape[0]}, "
            f"facets={self.A.shape[0]})"
        )


def _points_segments_distance(
    pts: np.ndarray, seg_a: np.ndarray, seg_b: np.ndarray
) -> np.ndarray:
    """Min distance from each point to a family of segments (2D)."""
    d = seg_b - seg_a  # (m, 2)
    len2 = np.maximum(np.einsum("ij,ij->i", d, d), 1e-300)
    diff = pts[:, None, :] - seg_a[None, :, :]  # (k, m, 2)
    t = np.clip(np.einsum("kmj,mj->km", diff, d) / len2, 0.0, 1.0)
    proj = seg_a[None, :, :] + t[:, :, None] * d[None, :, :]
    dist = np.linalg.norm(pts[:, None, :] - proj, axis=2)
    return dist.min(axis=1)


# ---------------------------------------------------------------------------
# Vertex enumeration


@dataclass
class VertexEnumeration:
    """Outcome of intersecting halfspaces.

    ``status`` is one of ``"empty"``, ``"unbounded"``, ``"body"``,
    ``"degenerate"``.  For ``body`` the polytope is full-dimensional;
    for ``degenerate`` the extreme points plus affine-hull data are
    provided.
    """

    status: str
    body: ConvexBody | None = None
    points: np.ndarray | None = None
    affine_dim: int | None = None
    origin: np.ndarray | None = None
    basis: np.ndarray | None = None


_MAX_TUPLES = 2_000_000


def vertex_enumeration(
    halfspaces,
    tol: ToleranceConfig = DEFAULT_TOL,
    *,
    assume_bounded: bool = False,
    feas_slack: float | None = None,
) -> VertexEnumeration:
    """Exact vertex enumeration of ``{x : A x <= b}`` in dimension <= 3.

    Vertices are found by solving all full-rank dim-tuples of
    constraint rows and filtering by feasibility; duplicates are merged
    within the geometric tolerance.  Emptiness is certified by LP
    phase 1 and unboundedness by coordinate LPs (skipped when the
    caller can prove boundedness a priori).
    """
    A, b = as_matrix(halfspaces)
    m, dim = A.shape
    if dim > 3:
        raise ValueError("vertex enumeration supports dimensions 1-3 only")
    norms = np.linalg.norm(A, axis=1)
    zero = norms <= tol.eps_lp
    if np.any(zero):
        if np.any(b[zero] < -tol.eps_geom):
            return VertexEnumeration("empty")
        A, b, norms = A[~zero], b[~zero], norms[~zero]
        m = A.shape[0]
    if m == 0:
        return VertexEnumeration("unbounded")
    A = A / norms[:, None]
    b = b / norms

    if not lp.is_feasible(A, b, tol=tol.eps_lp):
        return VertexEnumeration("empty")
    if not assume_bounded:
        for j in range(dim):
            e = np.zeros(dim)
            e[j] = 1.0
            for sign in (1.0, -1.0):
                try:
                    lp.simplex_min(sign * e, A, b, tol=tol.eps_lp)
                except lp.Unbounded:
                    return VertexEnumeration("unbounded")

    if m < dim:
        # Feasible, bounded was asserted/checked, yet fewer rows than
        # the dimension: only possible for degenerate flats when the
        # caller promised boundedness wrongly.
        raise ValueError("fewer constraints than dimension cannot bound a polytope")

    n_tuples = math.comb(m, dim)
    if n_tuples > _MAX_TUPLES:
        raise ValueError(f"vertex enumeration too large ({n_tuples} tuples)")
    idx = np.array(list(itertools.combinations(range(m), dim)), dtype=int)
    sub_A = A[idx]  # (T, dim, dim)
    sub_b = b[idx]  # (T, dim)
    dets = np.abs(np.linalg.det(sub_A))
    good = dets > 1e-10
    if not np.any(good):
        return _enumeration_fallback(A, b, tol)
    sols = np.linalg.solve(sub_A[good], sub_b[good][..., None])[..., 0]
    slack = feas_slack if feas_slack is not None else tol.eps_geom * 10
    scale = max(1.0, float(np.max(np.abs(b))))
    feas = np.all(sols @ A.T <= b[None, :] + slack * scale, axis=1)
    pts = sols[feas]
    if pts.shape[0] == 0:
        return _enumeration_fallback(A, b, tol)
    pts = dedupe_points(pts, tol.eps_geom * 100 * scale)
    return _classify_points(pts, dim, tol)


def _enumeration_fallback(A, b, tol: ToleranceConfig) -> VertexEnumeration:
    """Feasible system with no full-rank tuple solutions: the feasible
    set has no extreme point reachable by tuples, which for a bounded
    set means it is a single point or flat found via LP."""
    x = lp.feasible_point(A, b, tol=tol.eps_lp)
    return _classify_points(x[None, :], A.shape[1], tol)


def _classify_points(pts: np.ndarray, dim: int, tol: ToleranceConfig) -> VertexEnumeration:
    hull = convex_hull_any(pts, tol)
    if hull.is_full_dimensional:
        return VertexEnumeration(
            "body",
            body=hull.body,
            points=hull.body.vertices,
            affine_dim=dim,
            origin=hull.origin,
            basis=np.eye(dim),
        )
    return VertexEnumeration(
        "degenerate",
        body=None,
        points=hull.extremes,
        affine_dim=hull.affine_dim,
        origin=hull.origin,
        basis=hull.basis,
    )


# ---------------------------------------------------------------------------
# Spec-level operations


def lp_min(objective: np.ndarray, constraints) -> tuple[float, np.ndarray]:
    """Minimize a linear objective over an H-polyhedron.

    Returns ``(value, point)`` where the point is the lexicographically
    smallest optimal point.  Raises :class:`ballconv.lp.Infeasible` or
    :class:`ballconv.lp.Unbounded` (legitimate outcomes for callers).
    """
    A, b = as_matrix(constraints)
    objective = np.asarray(objective, dtype=float).ravel()
    if objective.shape[0] != A.shape[1]:
        raise ValueError("objective/constraint dimension mismatch")
    return lp.lex_min_point(objective, A, b)


def support(body: ConvexBody, u: np.ndarray) -> float:
    """Support function ``h_B(u) = max_{ x in B } u . x``."""
    return body.support(u)


def minkowski_sum_2d(A: ConvexBody, B, tol: ToleranceConfig = DEFAULT_TOL) -> ConvexBody:
    """Minkowski sum of two convex polygons by the edge-merge
    algorithm; the result has at most |A| + |B| vertices.

    ``B`` may also be a single point (array-like), in which case the
    sum is a translate of ``A``.
    """
    if not isinstance(B, ConvexBody):
        pts = np.atleast_2d(np.asarray(B, dtype=float))
        if pts.shape[0] == 1:
            return A.translate(pts[0])
        raise ValueError("B must be a ConvexBody or a single point")
    if A.dim != 2 or B.dim != 2:
        raise ValueError("minkowski_sum_2d requires planar bodies")

    def bottom_cycle(body: ConvexBody) -> np.ndarray:
        cyc = body.ccw_vertices()
        start = int(np.lexsort((cyc[:, 0], cyc[:, 1]))[0])  # bottommost, then leftmost
        return np.roll(cyc, -start, axis=0)

    ca, cb = bottom_cycle(A), bottom_cycle(B)
    ea = np.roll(ca, -1, axis=0) - ca
    eb = np.roll(cb, -1, axis=0) - cb

    def half(u: np.ndarray) -> int:
        if u[1] > tol.eps_geom or (abs(u[1]) <= tol.eps_geom and u[0] > 0):
            return 0
        return 1

    out = [ca[0] + cb[0]]
    i = j = 0
    while i < len(ea) or j < len(eb):
        if i >= len(ea):
            step = eb[j]
            j += 1
        elif j >= len(eb):
            step = ea[i]
            i += 1
        else:
            ha, hb = half(ea[i]), half(eb[j])
            if ha != hb:
                take_a = ha < hb
            else:
                cr = ea[i][0] * eb[j][1] - ea[i][1] * eb[j][0]
                scale = max(1.0, np.linalg.norm(ea[i]) * np.linalg.norm(eb[j]))
                if abs(cr) <= tol.eps_geom * scale:
                    step = ea[i] + eb[j]
                    i += 1
                    j += 1
                    out.append(out[-1] + step)
                    continue
                take_a = cr > 0
            if take_a:
                step = ea[i]
                i += 1
            else:
                step = eb[j]
                j += 1
        out.append(out[-1] + step)
    return ConvexBody.from_vertices(np.array(out[:-1]), tol=tol)


def central_symmetral(C: ConvexBody, tol: ToleranceConfig = DEFAULT_TOL) -> ConvexBody:
    """The central symmetral ``(C - C) / 2`` (origin-symmetric, same
    width as C in every direction)."""
    key = "symmetral"
    if key in C._cache:
        return C._cache[key]
    v = C.vertices
    diffs = (v[:, None, :] - v[None, :, :]).reshape(-1, C.dim) * 0.5
    sym = ConvexBody.from_vertices(diffs, tol=tol)
    C._cache[key] = sym
    return sym


def _check_symmetric(B: ConvexBody, tol: ToleranceConfig) -> None:
    key = "symmetric_checked"
    if B._cache.get(key):
        return
    if np.any(B.b <= tol.eps_geom):
        raise ValueError("gauge body must contain the origin in its interior")
    if hausdorff_distance(B, B.reflect()) > tol.eps_set:
        raise ValueError("gauge body must be origin-symmetric")
    B._cache[key] = True


def gauge_norm(
    B: ConvexBody,
    v: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOL,
    *,
    validate: bool = True,
) -> float:
    """Minkowski gauge ``min { t >= 0 : v in t B }`` of an
    origin-symmetric body, via the facet formula max_i (n_i . v)/b_i."""
    if validate:
        _check_symmetric(B, tol)
    v = np.asarray(v, dtype=float).ravel()
    if v.shape[0] != B.dim:
        raise ValueError("vector dimension mismatch")
    return float(max(0.0, np.max((B.A @ v) / B.b)))


def gauge_norm_many(B: ConvexBody, V: np.ndarray) -> np.ndarray:
    """Gauge of many vectors at once (no validation)."""
    V = np.atleast_2d(np.asarray(V, dtype=float))
    return np.maximum(0.0, np.max((V @ B.A.T) / B.b[None, :], axis=1))


def c_distance(
    C: ConvexBody, p: np.ndarray, q: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL
) -> float:
    """C-distance of p and q: the gauge of q - p in the relative norm
    whose unit ball is the central symmetral of C.  Two points lie in a
    common translate of C iff their C-distance is at most 2."""
    p = np.asarray(p, dtype=float).ravel()
    q = np.asarray(q, dtype=float).ravel()
    sym = central_symmetral(C, tol)
    return gauge_norm(sym, q - p, tol, validate=False)


def diam_C(C: ConvexBody, X: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Diameter of a finite point set in C-distance."""
    pts = np.atleast_2d(np.asarray(X, dtype=float))
    if pts.shape[0] == 0:
        raise ValueError("diam_C of an empty set")
    if pts.shape[0] == 1:
        return 0.0
    sym = central_symmetral(C, tol)
    ii, jj = np.triu_indices(pts.shape[0], k=1)
    return float(np.max(gauge_norm_many(sym, pts[ii] - pts[jj])))


# ---------------------------------------------------------------------------
# Min-norm point (Wolfe) and Hausdorff distances


def min_norm_point(points: np.ndarray, eps: float = 1e-12) -> tuple[np.ndarray, float]:
    """Minimum-norm point of the convex hull of ``points`` (Wolfe's
    algorithm).  Returns ``(x, |x|)``.

    Used for exact point-to-polytope distances in any dimension without
    needing facet structure; the tolerance is far below the geometric
    comparison scales.
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    m = P.shape[0]
    norms2 = np.einsum("ij,ij->i", P, P)
    scale = max(1.0, float(np.max(norms2)))
    start = int(np.argmin(norms2))
    S = [start]
    lam = np.array([1.0])
    x = P[start].copy()
    for _ in range(16 * (m + 2)):
        dots = P @ x
        j = int(np.argmin(dots))
        if x @ x <= dots[j] + eps * scale:
            break
        if j in S:
            break
        S.append(j)
        lam = np.append(lam, 0.0)
        # Minor cycle: pull x to the affine minimizer over S, dropping
        # points whose barycentric weight would go negative.
        while True:
            Q = P[S]
            k = len(S)
            M = np.empty((k + 1, k + 1))
            M[0, 0] = 0.0
            M[0, 1:] = 1.0
            M[1:, 0] = 1.0
            M[1:, 1:] = Q @ Q.T
            rhs = np.zeros(k + 1)
            rhs[0] = 1.0
            try:
                sol = np.linalg.solve(M, rhs)
                alpha = sol[1:]
            except np.linalg.LinAlgError:
                alpha, *_ = np.linalg.lstsq(
                    np.vstack([np.ones(k), Q.T]), np.concatenate([[1.0], x * 0]), rcond=None
                )
            if np.all(alpha > eps):
                lam = alpha
                x = alpha @ Q
                break
            neg = alpha <= eps
            with np.errstate(divide="ignore", invalid="ignore"):
                theta_cand = lam[neg] / (lam[neg] - alpha[neg])
            theta = float(np.min(theta_cand[np.isfinite(theta_cand)], initial=1.0))
            theta = min(max(theta, 0.0), 1.0)
            lam = (1 - theta) * lam + theta * alpha
            keep = lam > eps
            if not np.any(keep):
                keep[int(np.argmax(lam))] = True
            S = [s for s, k_ in zip(S, keep) if k_]
            lam = lam[keep]
            lam = lam / lam.sum()
            x = lam @ P[S]
    return x, float(np.linalg.norm(x))


def distance_point_to_hull(p: np.ndarray, points: np.ndarray) -> float:
    """Euclidean distance from ``p`` to the convex hull of a finite
    point set (degenerate hulls included)."""
    p = np.asarray(p, dtype=float).ravel()
    _, d = min_norm_point(np.atleast_2d(points) - p)
    return d


def hausdorff_distance(A: ConvexBody, B: ConvexBody) -> float:
    """Hausdorff distance between convex polytopes (exact: attained at
    vertices for convex sets)."""
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    d1 = float(np.max(B.distances_to_points(A.vertices)))
    d2 = float(np.max(A.distances_to_points(B.vertices)))
    return max(d1, d2)


def hausdorff_points(P: np.ndarray, Q: np.ndarray) -> float:
    """Hausdorff distance between convex hulls of two point sets
    (either may be degenerate)."""
    P = np.atleast_2d(np.asarray(P, dtype=float))
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    if P.shape[0] == 0 or Q.shape[0] == 0:
        raise ValueError("hausdorff_points of an empty set")
    d1 = max(distance_point_to_hull(p, Q) for p in P)
    d2 = max(distance_point_to_hull(q, P) for q in Q)
    return max(d1, d2)
