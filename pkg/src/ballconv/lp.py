"""Dense two-phase simplex for small geometric linear programs.

The library needs linear programming in three places: support-function
minimization over H-polytopes, feasibility of translate-containment
systems, and boundedness checks during vertex enumeration.  All of
these instances are tiny (2-4 variables, at most a few hundred
constraints), so a dense tableau solver is both adequate and easy to
make deterministic.

Problems have the form

    minimize    c . x
    subject to  A x <= b,       x free.

Free variables are split as ``x = xp - xn`` with ``xp, xn >= 0`` and a
slack variable is added per row, giving the standard equality form
solved by the two-phase method.  Bland's rule (always pick the
lowest-index eligible entering variable, break ratio ties by the
lowest-index basic variable) makes the pivot sequence deterministic and
cycle-free.

``lex_min_point`` refines an optimum to the lexicographically smallest
optimal point by a sequence of restricted solves; callers that promise
reproducible certificates go through it.
"""

from __future__ import annotations

import numpy as np


class Infeasible(Exception):
    """The constraint system A x <= b has no solution."""


class Unbounded(Exception):
    """The objective is unbounded below on the feasible set."""


def _normalize_rows(A: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scale each constraint row to unit Euclidean norm.

    Keeps the absolute tolerances of the solver meaningful regardless of
    how callers scaled their halfspaces.  Zero rows are kept as-is and
    handled explicitly (0 . x <= b is trivially true or false).
    """
    norms = np.linalg.norm(A, axis=1)
    scale = np.where(norms > 0, norms, 1.0)
    return A / scale[:, None], b / scale


def _pivot(T: np.ndarray, basis: list[int], row: int, col: int) -> None:
    T[row] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row])
    basis[row] = col


def _bland_iterate(
    T: np.ndarray, basis: list[int], costs: np.ndarray, tol: float
) -> None:
    """Run simplex iterations on tableau ``T`` until optimal.

    ``T`` has shape (m, N+1) with the right-hand side in the last
    column.  Raises :class:`Unbounded` if a descent direction has no
    blocking constraint.
    """
    n_cols = T.shape[1] - 1
    max_pivots = 50 * (n_cols + T.shape[0]) + 1000
    for _ in range(max_pivots):
        reduced = costs - costs[basis] @ T[:, :n_cols]
        entering = -1
        for j in range(n_cols):
            if reduced[j] < -tol:
                entering = j
                break
        if entering < 0:
            return
        col = T[:, entering]
        best_row = -1
        best_ratio = np.inf
        for i in range(T.shape[0]):
            if col[i] > tol:
                ratio = T[i, -1] / col[i]
                if ratio < best_ratio - tol or (
                    ratio < best_ratio + tol
                    and (best_row < 0 or basis[i] < basis[best_row])
                ):
                    best_ratio = ratio
                    best_row = i
        if best_row < 0:
            raise Unbounded("no blocking constraint for entering column")
        _pivot(T, basis, best_row, entering)
    raise RuntimeError("simplex failed to converge (pivot limit reached)")


def simplex_min(
    c: np.ndarray,
    A: np.ndarray,
    b: np.ndarray,
    *,
    tol: float = 1e-10,
) -> tuple[float, np.ndarray]:
    """Minimize ``c . x`` subject to ``A x <= b`` with x free.

    Returns ``(value, x)`` at an optimal basic point.  Raises
    :class:`Infeasible` or :class:`Unbounded`.
    """
    c = np.asarray(c, dtype=float)
    A = np.atleast_2d(np.asarray(A, dtype=float))
    b = np.asarray(b, dtype=float).ravel()
    m, n = A.shape
    if c.shape != (n,):
        raise ValueError("objective dimension does not match constraints")

    A, b = _normalize_rows(A, b)

    # Drop trivially-true zero rows; a zero row with negative rhs is
    # infeasible outright.
    zero_rows = np.linalg.norm(A, axis=1) <= tol
    if np.any(zero_rows):
        if np.any(b[zero_rows] < -tol):
            raise Infeasible("zero constraint row with negative right-hand side")
        keep = ~zero_rows
        A, b = A[keep], b[keep]
        m = A.shape[0]
    if m == 0:
        if np.linalg.norm(c) <= tol:
            return 0.0, np.zeros(n)
        raise Unbounded("no constraints and nonzero objective")

    # Equality form: [A, -A, I] y = b with y >= 0, flipping rows to get
    # a nonnegative right-hand side.  Flipped rows need an artificial
    # variable because their slack enters with coefficient -1.
    flip = b < 0
    sign = np.where(flip, -1.0, 1.0)
    M = np.hstack([A, -A, np.eye(m)]) * sign[:, None]
    d = b * sign
    n_real = 2 * n + m

    art_rows = np.flatnonzero(flip)
    n_art = len(art_rows)
    if n_art:
        art_cols = np.zeros((m, n_art))
        for k, i in enumerate(art_rows):
            art_cols[i, k] = 1.0
        M = np.hstack([M, art_cols])

    T = np.hstack([M, d[:, None]])
    basis: list[int] = []
    art_iter = iter(range(n_real, n_real + n_art))
    for i in range(m):
        basis.append(next(art_iter) if flip[i] else 2 * n + i)

    if n_art:
        costs1 = np.zeros(n_real + n_art)
        costs1[n_real:] = 1.0
        _bland_iterate(T, basis, costs1, tol)
        phase1 = costs1[basis] @ T[:, -1]
        if phase1 > 1e3 * tol:
            raise Infeasible("phase-1 optimum positive")
        # Drive remaining artificials out of the basis or drop their
        # (redundant) rows.
        drop_rows = []
        for i in range(m):
            if basis[i] >= n_real:
                pivot_col = -1
                for j in range(n_real):
                    if abs(T[i, j]) > tol:
                        pivot_col = j
                        break
                if pivot_col >= 0:
                    _pivot(T, basis, i, pivot_col)
                else:
                    drop_rows.append(i)
        if drop_rows:
            keep = [i for i in range(T.shape[0]) if i not in drop_rows]
            T = T[keep]
            basis = [basis[i] for i in keep]
        T = np.hstack([T[:, :n_real], T[:, -1:]])

    costs2 = np.concatenate([c, -c, np.zeros(T.shape[1] - 1 - 2 * n)])
    _bland_iterate(T, basis, costs2, tol)

    y = np.zeros(T.shape[1] - 1)
    y[basis] = T[:, -1]
    x = y[:n] - y[n : 2 * n]
    return float(c @ x), x


def feasible_point(
    A: np.ndarray, b: np.ndarray, *, tol: float = 1e-10
) -> np.ndarray:
    """Return some feasible point of ``A x <= b`` or raise Infeasible."""
    n = np.atleast_2d(np.asarray(A, dtype=float)).shape[1]
    _, x = simplex_min(np.zeros(n), A, b, tol=tol)
    return x


def is_feasible(A: np.ndarray, b: np.ndarray, *, tol: float = 1e-10) -> bool:
    try:
        feasible_point(A, b, tol=tol)
        return True
    except Infeasible:
        return False


def lex_min_point(
    c: np.ndarray,
    A: np.ndarray,
    b: np.ndarray,
    *,
    tol: float = 1e-10,
    tie_slack: float = 1e-9,
) -> tuple[float, np.ndarray]:
    """Minimize ``c . x`` and break ties to the lexicographically
    smallest optimal point.

    After the main solve, the optimal face is pinned by the constraint
    ``c . x <= value + tie_slack`` and the coordinates are minimized one
    by one.  The slack is necessary in floating point (an exact equality
    cut would often be infeasible) and is far below every tolerance the
    geometric layer uses to compare points.
    """
    c = np.asarray(c, dtype=float)
    A = np.atleast_2d(np.asarray(A, dtype=float))
    b = np.asarray(b, dtype=float).ravel()
    n = A.shape[1]
    value, x = simplex_min(c, A, b, tol=tol)

    cur_A, cur_b = A, b
    if np.linalg.norm(c) > tol:
        scale = np.linalg.norm(c)
        cur_A = np.vstack([cur_A, c / scale])
        cur_b = np.concatenate([cur_b, [(value + tie_slack) / scale]])
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        try:
            _, x = simplex_min(e, cur_A, cur_b, tol=tol)
        except Unbounded:
            # Optimal face unbounded in -e_j; leave coordinate as found.
            break
        cur_A = np.vstack([cur_A, e])
        cur_b = np.concatenate([cur_b, [x[j] + tie_slack]])
    return float(c @ x), x
