"""Independent brute-force oracles used by the tests.

These deliberately avoid the library's simplex: the diagonal value is
recomputed by enumerating candidate vertices of the feasible region
{ (lambda, t) : lambda >= 0, sum(lambda) = 1, (support matrix) lambda <= t }
directly.  A vertex activates the convexity equality plus a mix of
lambda = 0 and tight-coordinate constraints totalling one per variable;
every nonsingular activation pattern is solved exactly and the feasible
ones are scanned for the least t.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def solve_square(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """Exact Gaussian elimination; returns None when the system is singular."""
    size = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if aug[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][-1] for r in range(size)]


def diagonal_by_vertex_enumeration(points) -> Fraction:
    """Least t with (t, ..., t) in conv(points) + nonnegative orthant."""
    pts = sorted(tuple(p) for p in points)
    npts = len(pts)
    dim = len(pts[0])
    if any(not any(p) for p in pts):
        return Fraction(0)

    best = None
    for tight in range(1, dim + 1):
        for coords in itertools.combinations(range(dim), tight):
            zero_count = npts - tight
            if zero_count < 0:
                continue
            for zeros in itertools.combinations(range(npts), zero_count):
                free = [j for j in range(npts) if j not in zeros]
                # unknowns: lambda_j for j free, then t
                size = len(free) + 1
                matrix = []
                rhs = []
                matrix.append([Fraction(1)] * len(free) + [Fraction(0)])
                rhs.append(Fraction(1))
                for i in coords:
                    matrix.append([Fraction(pts[j][i]) for j in free] + [Fraction(-1)])
                    rhs.append(Fraction(0))
                solution = solve_square(matrix, rhs)
                if solution is None:
                    continue
                lams = {j: solution[idx] for idx, j in enumerate(free)}
                t = solution[-1]
                if any(lam < 0 for lam in lams.values()):
                    continue
                full = [lams.get(j, Fraction(0)) for j in range(npts)]
                feasible = all(
                    sum(full[j] * pts[j][i] for j in range(npts)) <= t for i in range(dim)
                )
                if not feasible:
                    continue
                if best is None or t < best:
                    best = t
    assert best is not None, f"no feasible vertex found for {pts}"
    return best
