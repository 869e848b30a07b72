"""Newton polyhedron diagonal values via exact linear programming.

The Newton polyhedron of a finite monomial support S in Z_{>=0}^n is
conv(S) + R_{>=0}^n.  The diagonal value is

    c = min{ t : (t, ..., t) lies in the polyhedron },

and 1/c is the minimal exponent at the origin of an isolated singularity
that is nondegenerate with respect to its polyhedron.  Membership of the
diagonal point reduces to the tiny linear program

    minimize t   subject to   lambda >= 0,  sum(lambda) = 1,
                              sum_u lambda_u * u_i <= t  for each i,

because the recession orthant absorbs any componentwise slack.  The program
is solved by an exact-arithmetic two-phase simplex with Bland's anti-cycling
rule; sizes are tiny (|S| + 1 variables), so this is instantaneous.

Every result carries two certificates that are re-verified independently of
the solver: a primal one (convex weights placing the diagonal point inside
the polyhedron at t = c) and a dual one (a nonnegative vector v with
sum(v) <= 1 and min_u <u, v> = c, which proves no smaller t is feasible:
t >= t * sum(v) >= sum_u lambda_u <u, v> >= c for any feasible (lambda, t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from minexp.poly import Poly, as_weights, weighted_order


@dataclass(frozen=True)
class MonomialSupport:
    """A finite set of exponent vectors in a fixed dimension."""

    n: int
    points: frozenset[tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(
            self, "points", frozenset(tuple(int(x) for x in p) for p in self.points)
        )
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n}")
        if not self.points:
            raise ValueError("support must be nonempty")
        for p in self.points:
            if len(p) != self.n:
                raise ValueError(f"point {p} does not have dimension {self.n}")
            if any(x < 0 for x in p):
                raise ValueError(f"point {p} has a negative entry")

    @classmethod
    def from_poly(cls, f: Poly) -> "MonomialSupport":
        if f.is_zero():
            raise ValueError("the zero polynomial has empty support")
        return cls(len(f.variables), frozenset(f.support()))

    @property
    def origin(self) -> tuple[int, ...]:
        return (0,) * self.n


@dataclass(frozen=True)
class DiagonalResult:
    """Diagonal value c with primal and dual optimality certificates.

    ``certificate`` pairs every support point with its convex weight;
    ``dual`` is the separating weight vector described in the module
    docstring.  :meth:`verify` re-checks both with plain arithmetic.
    """

    c: Fraction
    certificate: tuple[tuple[tuple[int, ...], Fraction], ...]
    dual: tuple[Fraction, ...]

    def verify(self) -> bool:
        pts = [p for p, _ in self.certificate]
        lams = [l for _, l in self.certificate]
        if not pts:
            return False
        n = len(pts[0])
        if any(l < 0 for l in lams) or sum(lams) != 1:
            return False
        column = [sum(l * p[i] for l, p in zip(lams, pts)) for i in range(n)]
        if any(y > self.c for y in column):
            return False
        if max(column) != self.c:  # the bound must be tight somewhere at optimum
            return False
        v = self.dual
        if len(v) != n or any(x < 0 for x in v):
            return False
        if sum(v) > 1:
            return False
        if min(sum(x * e for x, e in zip(v, p)) for p in pts) != self.c:
            return False
        return True


# ---------------------------------------------------------------------------
# exact two-phase simplex (dense tableau, Bland's rule)

def _reduced_costs(rows, basis, cost):
    red = [Fraction(x) for x in cost] + [Fraction(0)]
    for r, b in enumerate(basis):
        cb = cost[b]
        if cb:
            row = rows[r]
            for j in range(len(red)):
                red[j] -= cb * row[j]
    return red


def _pivot(rows, basis, red, leave, enter):
    piv_row = rows[leave]
    piv = piv_row[enter]
    rows[leave] = [x / piv for x in piv_row]
    piv_row = rows[leave]
    for r, row in enumerate(rows):
        if r != leave and row[enter]:
            f = row[enter]
            rows[r] = [x - f * y for x, y in zip(row, piv_row)]
    if red[enter]:
        f = red[enter]
        for j in range(len(red)):
            red[j] -= f * piv_row[j]
    basis[leave] = enter


def _iterate(rows, basis, red, allowed):
    while True:
        enter = None
        for j in allowed:  # Bland: smallest eligible index enters
            if red[j] < 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best = None
        for r, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[r] < basis[leave])
                ):
                    best = ratio
                    leave = r
        if leave is None:
            raise RuntimeError("unbounded linear program; impossible for this formulation")
        _pivot(rows, basis, red, leave, enter)


def _solve_diagonal_lp(pts: list[tuple[int, ...]]):
    npts = len(pts)
    dim = len(pts[0])
    t_col = npts
    s0 = npts + 1
    art = npts + 1 + dim
    ncols = art + 1

    rows = []
    row0 = [Fraction(0)] * (ncols + 1)
    for j in range(npts):
        row0[j] = Fraction(1)
    row0[art] = Fraction(1)
    row0[-1] = Fraction(1)
    rows.append(row0)
    for i in range(dim):
        row = [Fraction(0)] * (ncols + 1)
        for j, u in enumerate(pts):
            row[j] = Fraction(u[i])
        row[t_col] = Fraction(-1)
        row[s0 + i] = Fraction(1)
        rows.append(row)
    basis = [art] + [s0 + i for i in range(dim)]

    # phase 1: drive the artificial variable of the convexity row to zero
    cost1 = [Fraction(0)] * ncols
    cost1[art] = Fraction(1)
    red1 = _reduced_costs(rows, basis, cost1)
    _iterate(rows, basis, red1, range(ncols))
    if red1[-1] != 0:
        raise RuntimeError("phase 1 failed; the program is always feasible")
    if art in basis:
        r = basis.index(art)
        for j in range(ncols):
            if j != art and rows[r][j] != 0:
                _pivot(rows, basis, red1, r, j)
                break
        else:
            raise RuntimeError("could not drive the artificial variable out")

    # phase 2: minimize t, artificial column locked out
    cost2 = [Fraction(0)] * ncols
    cost2[t_col] = Fraction(1)
    red2 = _reduced_costs(rows, basis, cost2)
    _iterate(rows, basis, red2, [j for j in range(ncols) if j != art])

    x = [Fraction(0)] * ncols
    for r, b in enumerate(basis):
        x[b] = rows[r][-1]
    lambdas = x[:npts]
    c = x[t_col]
    dual = [red2[s0 + i] for i in range(dim)]
    return c, lambdas, dual


def diagonal_entry(support: MonomialSupport) -> DiagonalResult:
    """Exact diagonal value of the Newton polyhedron, with certificates."""
    pts = sorted(support.points)
    c, lambdas, dual = _solve_diagonal_lp(pts)
    result = DiagonalResult(
        c=c,
        certificate=tuple(zip(pts, lambdas)),
        dual=tuple(dual),
    )
    if not result.verify():
        raise RuntimeError(f"internal error: certificate failed to verify for {pts}")
    return result


def newton_exponent(support: MonomialSupport) -> Fraction:
    """Reciprocal 1/c of the diagonal value.

    Valid as the minimal exponent at the origin only under the caller's
    attestation that the singularity is isolated and nondegenerate with
    respect to its Newton polyhedron; neither hypothesis is checked.
    """
    if support.origin in support.points:
        raise ValueError("support contains the origin: not in the maximal ideal")
    return 1 / diagonal_entry(support).c


def weighted_order_bound(f: Poly, weights: Sequence) -> Fraction:
    """Upper bound (w_1 + ... + w_n) / wt(f) for the minimal exponent at the
    origin of the hypersurface f = 0.

    Requires the origin to be a singular point, i.e. every monomial of f has
    total degree at least 2.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial defines no hypersurface")
    if any(sum(u) < 2 for u in f.terms):
        raise ValueError(
            "f has a term of total degree <= 1: the origin is not a singular point, "
            "so the bound does not apply"
        )
    w = as_weights(weights, len(f.variables))
    return sum(w) / weighted_order(f, w)
