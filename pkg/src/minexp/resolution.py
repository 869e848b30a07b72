"""Blow-up chart calculus and the exceptional-divisor ledger.

The cone over a transverse complete intersection with degrees
d_1 <= ... <= d_r admits an explicit resolution: blow up the origin, then
repeatedly blow up the intersection of the newest exceptional divisor with
the strict transforms of the hypersurfaces of smallest degree, one blow-up
per missing degree step.  In the only chart that matters the pulled-back
ideal is monomial at every stage, starting from

    (z0^{d_1} z1, ..., z0^{d_r} zr)

after the origin blow-up (z0 cuts the exceptional divisor, z1..zr the
strict transforms).  Each blow-up along {z0} u {z1..zq} replaces, in the
chart keeping z0, every generator's z0-exponent by its total exponent over
the center.  The simulation tracks, for each new divisor E_j, its
multiplicity a_j in the pulled-back ideal and its discrepancy k_j:

    a_j = min over transformed generators of the new exceptional exponent,
    k_j = (codim(center) - 1) + sum of the discrepancies of the exceptional
          divisors containing the center,

with k_1 = n - 1 for the origin blow-up.  The resulting lower bound
min_j (k_j + 1) / a_j must agree exactly with the closed-form exponent;
that agreement scan is this module's primary oracle.

The module also brute-force-verifies the valuation inequalities behind the
lower bound on integer grids, and checks the telescoping chain argument
used to prove them pointwise on rational grids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from minexp.exponent import DegreeProfile, exponent_candidates

EXCEPTIONAL = "exceptional"
STRICT = "strict"
PLAIN = "plain"

STRONG_FACTORIZING = "strong_factorizing"
LOG_RESOLUTION = "log_resolution"

_LETTERS = ("z", "u", "v", "w", "s", "t", "q", "m")


def _letter(depth: int) -> str:
    return _LETTERS[depth] if depth < len(_LETTERS) else f"c{depth}_"


class ResolutionError(RuntimeError):
    """An internal chart-calculus invariant failed (a bug, not bad input)."""


@dataclass(frozen=True)
class GroupedDegrees:
    """Sorted degrees grouped into strictly increasing levels with counts."""

    levels: tuple[tuple[int, int], ...]  # (degree value, multiplicity)

    def __post_init__(self):
        object.__setattr__(
            self, "levels", tuple((int(e), int(p)) for e, p in self.levels)
        )
        if not self.levels:
            raise ValueError("levels must be nonempty")
        values = [e for e, _ in self.levels]
        if values != sorted(set(values)):
            raise ValueError(f"level values must be strictly increasing, got {values}")
        if any(p < 1 for _, p in self.levels):
            raise ValueError("multiplicities must be at least 1")

    @classmethod
    def from_degrees(cls, degrees: Sequence[int]) -> "GroupedDegrees":
        levels = []
        for d in degrees:
            if levels and levels[-1][0] == d:
                levels[-1][1] += 1
            else:
                levels.append([d, 1])
        return cls(tuple((e, p) for e, p in levels))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.levels)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(p for _, p in self.levels)

    @property
    def cumulative(self) -> tuple[int, ...]:
        out = []
        total = 0
        for _, p in self.levels:
            total += p
            out.append(total)
        return tuple(out)

    def degrees(self) -> tuple[int, ...]:
        return tuple(e for e, p in self.levels for _ in range(p))


@dataclass(frozen=True)
class Coordinate:
    """A chart coordinate: exceptional ones carry their ledger tags."""

    name: str
    role: str
    a: int | None = None
    k: int | None = None

    def __post_init__(self):
        if self.role not in (EXCEPTIONAL, STRICT, PLAIN):
            raise ValueError(f"unknown coordinate role {self.role!r}")
        if self.role == EXCEPTIONAL:
            if self.a is None or self.k is None:
                raise ValueError(f"exceptional coordinate {self.name} needs (a, k) tags")
            if self.a < 0 or self.k < 0:
                raise ValueError(f"negative ledger tags on {self.name}")
        elif self.a is not None or self.k is not None:
            raise ValueError(f"non-exceptional coordinate {self.name} cannot carry tags")


@dataclass(frozen=True)
class ChartState:
    """A coordinate chart with a monomial ideal (tuple of exponent vectors)."""

    coords: tuple[Coordinate, ...]
    ideal: tuple[tuple[int, ...], ...]
    depth: int = 0
    born_center: tuple[str, ...] | None = None
    born_pivot: str | None = None
    born_pivot_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "ideal", tuple(tuple(g) for g in self.ideal))
        names = [c.name for c in self.coords]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate coordinate names: {names}")
        for g in self.ideal:
            if len(g) != len(self.coords):
                raise ValueError(f"generator {g} does not match the coordinate count")
            if any((not isinstance(e, int)) or e < 0 for e in g):
                raise ValueError(f"generator {g} must have nonnegative integer exponents")
            if not any(g):
                raise ValueError("a generator is the unit monomial; not a proper ideal")

    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.coords)

    def index(self, name: str) -> int:
        for i, c in enumerate(self.coords):
            if c.name == name:
                return i
        raise ValueError(f"no coordinate named {name!r}")

    def render_monomial(self, g: Sequence[int]) -> str:
        parts = []
        for c, e in zip(self.coords, g):
            if e == 1:
                parts.append(c.name)
            elif e > 1:
                parts.append(f"{c.name}^{e}")
        return "*".join(parts) if parts else "1"

    def render_ideal(self) -> str:
        if not self.ideal:
            return "(0)"
        return "(" + ", ".join(self.render_monomial(g) for g in self.ideal) + ")"


def blowup_chart(state: ChartState, center: Iterable[str]) -> list[ChartState]:
    """Transform a monomial ideal under the blow-up of a coordinate subspace.

    Returns one chart per pivot coordinate of the center, in coordinate
    order.  In the pivot chart every generator's pivot exponent becomes the
    sum of its exponents over the center; all other exponents are unchanged.
    The pivot coordinate becomes the new exceptional divisor, tagged with

        a = min over transformed generators of the pivot exponent,
        k = (|center| - 1) + sum of k over exceptional coordinates in center,

    while the remaining center coordinates keep their roles (they cut the
    strict transforms of whatever they cut before).
    """
    center = tuple(dict.fromkeys(center))
    names = state.names()
    for name in center:
        if name not in names:
            raise ValueError(f"center coordinate {name!r} is not in the chart")
    if len(center) < 2:
        raise ValueError("center must contain at least two coordinates")
    center_idx = [i for i, c in enumerate(state.coords) if c.name in center]
    k_new = (len(center) - 1) + sum(
        state.coords[i].k for i in center_idx if state.coords[i].role == EXCEPTIONAL
    )
    letter = _letter(state.depth + 1)
    charts = []
    for pivot_pos in center_idx:
        new_gens = []
        for g in state.ideal:
            total = sum(g[i] for i in center_idx)
            h = list(g)
            h[pivot_pos] = total
            new_gens.append(tuple(h))
        a_new = min((g[pivot_pos] for g in new_gens), default=0)
        new_coords = []
        for i, c in enumerate(state.coords):
            name = f"{letter}{i}"
            if i == pivot_pos:
                new_coords.append(Coordinate(name, EXCEPTIONAL, a_new, k_new))
            else:
                new_coords.append(Coordinate(name, c.role, c.a, c.k))
        charts.append(
            ChartState(
                coords=tuple(new_coords),
                ideal=tuple(new_gens),
                depth=state.depth + 1,
                born_center=center,
                born_pivot=state.coords[pivot_pos].name,
                born_pivot_index=pivot_pos,
            )
        )
    return charts


@dataclass(frozen=True)
class LedgerRow:
    """One exceptional divisor: its ideal multiplicity a and discrepancy k."""

    divisor: str
    a: int
    k: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"divisor multiplicity must be >= 1, got {self.a}")
        if self.k < 0:
            raise ValueError(f"discrepancy must be >= 0, got {self.k}")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.k + 1, self.a)


@dataclass(frozen=True)
class DivisorLedger:
    rows: tuple[LedgerRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise ValueError("ledger must be nonempty")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "DivisorLedger":
        return cls(tuple(LedgerRow(f"E{i}", a, k) for i, (a, k) in enumerate(pairs, 1)))

    @property
    def lower_bound(self) -> Fraction:
        return min(row.ratio for row in self.rows)


@dataclass(frozen=True)
class TraceStep:
    center: tuple[str, ...] | str
    pivot: str | None
    divisor: str
    a: int
    k: int
    ideal: str


@dataclass(frozen=True)
class VjCheck:
    """Depth-one expansion of a non-pivot chart: the transformed ideal must
    be principal with an exceptional-supported generator."""

    divisor: str
    pivot: str
    ideal: str
    generator: str


@dataclass(frozen=True)
class Case3Report:
    """A side chart where only the first q strict transforms survive; its
    chain must terminate in a purely exceptional principal ideal."""

    level: int
    steps: tuple[str, ...]
    principal: str


@dataclass(frozen=True)
class FactorizationWitness:
    """Terminal-chart factorization: a monomial supported on exceptional
    coordinates times the ideal of r distinct strict-transform coordinates."""

    common: str
    residual: tuple[str, ...]


@dataclass(frozen=True)
class ResolutionReport:
    profile: DegreeProfile
    mode: str
    grouped: GroupedDegrees
    ledger: DivisorLedger
    lower_bound: Fraction
    blowup_count: int
    witness: FactorizationWitness | None
    trace: tuple[TraceStep, ...]
    case3: tuple[Case3Report, ...]
    vj_checks: tuple[VjCheck, ...]
    terminal: ChartState

    def to_json_dict(self) -> dict:
        def rat(x: Fraction) -> dict:
            return {"num": x.numerator, "den": x.denominator}

        return {
            "n": self.profile.n,
            "degrees": list(self.profile.degrees),
            "mode": self.mode,
            "levels": [list(level) for level in self.grouped.levels],
            "blowups": self.blowup_count,
            "ledger": [
                {"divisor": row.divisor, "a": row.a, "k": row.k, "ratio": rat(row.ratio)}
                for row in self.ledger.rows
            ],
            "lower_bound": rat(self.lower_bound),
            "witness": (
                None
                if self.witness is None
                else {"common": self.witness.common, "residual": list(self.witness.residual)}
            ),
            "trace": [
                {
                    "center": step.center if isinstance(step.center, str) else list(step.center),
                    "pivot": step.pivot,
                    "divisor": step.divisor,
                    "a": step.a,
                    "k": step.k,
                    "ideal": step.ideal,
                }
                for step in self.trace
            ],
            "case3": [
                {"level": c.level, "steps": list(c.steps), "principal": c.principal}
                for c in self.case3
            ],
            "vj_checks": [
                {"divisor": v.divisor, "pivot": v.pivot, "ideal": v.ideal, "generator": v.generator}
                for v in self.vj_checks
            ],
        }


def _componentwise_min(gens: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    return tuple(min(g[i] for g in gens) for i in range(len(gens[0])))


def _principal_exceptional_generator(state: ChartState) -> tuple[int, ...]:
    """The componentwise minimum must itself be a generator (the ideal is
    principal) and be supported on exceptional coordinates only."""
    if not state.ideal:
        raise ResolutionError(f"empty ideal in chart {state.names()}")
    gmin = _componentwise_min(state.ideal)
    if gmin not in state.ideal:
        raise ResolutionError(f"ideal {state.render_ideal()} is not principal")
    for c, e in zip(state.coords, gmin):
        if e > 0 and c.role != EXCEPTIONAL:
            raise ResolutionError(
                f"principal generator {state.render_monomial(gmin)} is not exceptional-supported"
            )
    return gmin


def _start_chart(profile: DegreeProfile) -> ChartState:
    """The chart after the origin blow-up: the exceptional coordinate z0
    tagged (a = d_1, k = n - 1), strict transforms z1..zr, plain fill."""
    n, degrees = profile.n, profile.degrees
    r = profile.r
    coords = [Coordinate("z0", EXCEPTIONAL, degrees[0], n - 1)]
    coords += [Coordinate(f"z{j}", STRICT) for j in range(1, r + 1)]
    coords += [Coordinate(f"z{j}", PLAIN) for j in range(r + 1, n)]
    width = len(coords)
    gens = []
    for j in range(1, r + 1):
        g = [0] * width
        g[0] = degrees[j - 1]
        g[j] = 1
        gens.append(tuple(g))
    return ChartState(tuple(coords), tuple(gens))


def _case3_start(profile: DegreeProfile, grouped: GroupedDegrees, level: int) -> ChartState:
    """Chart on the first exceptional divisor where only the strict
    transforms of degree level <= ``level`` pass through, while the next
    group contributes a pure power of the exceptional coordinate."""
    n, degrees = profile.n, profile.degrees
    q = grouped.cumulative[level - 1]
    extra = grouped.values[level]
    coords = [Coordinate("z0", EXCEPTIONAL, degrees[0], n - 1)]
    coords += [Coordinate(f"z{j}", STRICT) for j in range(1, q + 1)]
    coords += [Coordinate(f"z{j}", PLAIN) for j in range(q + 1, n)]
    width = len(coords)
    gens = []
    for j in range(1, q + 1):
        g = [0] * width
        g[0] = degrees[j - 1]
        g[j] = 1
        gens.append(tuple(g))
    g = [0] * width
    g[0] = extra
    gens.append(tuple(g))
    return ChartState(tuple(coords), tuple(gens))


def _follow_exceptional(
    state: ChartState, strict_count: int, divisor: str, collect_vj: list | None
) -> ChartState:
    """Run one scripted blow-up and keep the chart that retains the
    exceptional coordinate; the other charts must come out divisorial."""
    exc = state.coords[0]
    if exc.role != EXCEPTIONAL:
        raise ResolutionError("chain chart lost its exceptional coordinate")
    center = (exc.name,) + tuple(state.coords[j].name for j in range(1, strict_count + 1))
    charts = blowup_chart(state, center)
    follow = None
    orders = set()
    for chart in charts:
        newc = chart.coords[chart.born_pivot_index]
        orders.add(newc.a)
        if chart.born_pivot == exc.name:
            follow = chart
        else:
            gmin = _principal_exceptional_generator(chart)
            if collect_vj is not None:
                collect_vj.append(
                    VjCheck(
                        divisor=divisor,
                        pivot=chart.born_pivot,
                        ideal=chart.render_ideal(),
                        generator=chart.render_monomial(gmin),
                    )
                )
    if follow is None:
        raise ResolutionError("no chart kept the exceptional coordinate")
    if len(orders) != 1:
        raise ResolutionError(f"chart-dependent divisor multiplicity: {sorted(orders)}")
    return follow


def _run_case3(profile: DegreeProfile, grouped: GroupedDegrees, level: int) -> Case3Report:
    e = grouped.values
    cum = grouped.cumulative
    state = _case3_start(profile, grouped, level)
    steps = [state.render_ideal()]
    for stage in range(1, level + 1):
        for _ in range(e[stage] - e[stage - 1]):
            state = _follow_exceptional(state, cum[stage - 1], divisor="", collect_vj=None)
            steps.append(state.render_ideal())
    gmin = _principal_exceptional_generator(state)
    expected = e[level]
    if gmin[0] != expected or any(gmin[1:]):
        raise ResolutionError(
            f"side chain at level {level} ended in {state.render_monomial(gmin)}, "
            f"expected the exceptional coordinate to the power {expected}"
        )
    return Case3Report(level=level, steps=tuple(steps), principal=state.render_monomial(gmin))


def _factorization_witness(state: ChartState, profile: DegreeProfile) -> FactorizationWitness:
    gens = state.ideal
    # divisorial part: the common exceptional exponents; everything else must
    # be accounted for by the residual shape checks below
    common = tuple(
        min(g[i] for g in gens) if c.role == EXCEPTIONAL else 0
        for i, c in enumerate(state.coords)
    )
    residual = [tuple(g[i] - common[i] for i in range(len(common))) for g in gens]
    seen = set()
    for res in residual:
        support = [i for i, exp in enumerate(res) if exp]
        if len(support) != 1 or res[support[0]] != 1:
            raise ResolutionError(f"residual generator {res} is not a single coordinate")
        i = support[0]
        if state.coords[i].role != STRICT:
            raise ResolutionError(f"residual coordinate {state.coords[i].name} is not strict")
        seen.add(i)
    if len(seen) != profile.r:
        raise ResolutionError("residual generators do not span r distinct coordinates")
    return FactorizationWitness(
        common=state.render_monomial(common),
        residual=tuple(state.render_monomial(res) for res in residual),
    )


def simulate_resolution(profile: DegreeProfile) -> ResolutionReport:
    """Drive the scripted blow-up sequence and collect the divisor ledger.

    For codimension r < n this is a strong factorizing resolution and the
    terminal chart must factor as (exceptional monomial) * (r coordinates);
    for r = n the same bookkeeping runs in log-resolution mode and no
    factorization witness is asserted.
    """
    n = profile.n
    grouped = GroupedDegrees.from_degrees(profile.degrees)
    e = grouped.values
    cum = grouped.cumulative
    k = len(e)
    mode = LOG_RESOLUTION if profile.r == n else STRONG_FACTORIZING

    state = _start_chart(profile)
    rows = [LedgerRow("E1", profile.degrees[0], n - 1)]
    trace = [
        TraceStep(
            center="origin",
            pivot=None,
            divisor="E1",
            a=profile.degrees[0],
            k=n - 1,
            ideal=state.render_ideal(),
        )
    ]
    vj_checks: list[VjCheck] = []

    for stage in range(1, k):
        strict_count = cum[stage - 1]
        for _ in range(e[stage] - e[stage - 1]):
            divisor = f"E{len(rows) + 1}"
            exc_name = state.coords[0].name
            center = (exc_name,) + tuple(
                state.coords[j].name for j in range(1, strict_count + 1)
            )
            state = _follow_exceptional(state, strict_count, divisor, vj_checks)
            newc = state.coords[0]
            rows.append(LedgerRow(divisor, newc.a, newc.k))
            trace.append(
                TraceStep(
                    center=center,
                    pivot=exc_name,
                    divisor=divisor,
                    a=newc.a,
                    k=newc.k,
                    ideal=state.render_ideal(),
                )
            )

    expected_a = list(range(e[0], e[-1] + 1))
    if [row.a for row in rows] != expected_a:
        raise ResolutionError(f"ledger multiplicities {[r.a for r in rows]} != {expected_a}")
    ks = [row.k for row in rows]
    if any(ks[i] >= ks[i + 1] for i in range(len(ks) - 1)):
        raise ResolutionError(f"discrepancies not strictly increasing: {ks}")
    blowup_count = 1 + e[-1] - e[0]
    if blowup_count != len(rows):
        raise ResolutionError("blow-up count does not match the ledger length")

    witness = _factorization_witness(state, profile) if mode == STRONG_FACTORIZING else None
    case3 = tuple(_run_case3(profile, grouped, level) for level in range(1, k))

    ledger = DivisorLedger(tuple(rows))
    return ResolutionReport(
        profile=profile,
        mode=mode,
        grouped=grouped,
        ledger=ledger,
        lower_bound=ledger.lower_bound,
        blowup_count=blowup_count,
        witness=witness,
        trace=tuple(trace),
        case3=case3,
        vj_checks=tuple(vj_checks),
        terminal=state,
    )


def ledger_lower_bound(ledger: DivisorLedger | ResolutionReport) -> Fraction:
    """min over the ledger of (k_j + 1) / a_j."""
    if isinstance(ledger, ResolutionReport):
        ledger = ledger.ledger
    return ledger.lower_bound


# ---------------------------------------------------------------------------
# brute-force verification of the valuation inequalities

LCT_BRANCH = "lct"
COMPLEMENTARY_BRANCH = "complementary"


@dataclass(frozen=True)
class ValuationScanReport:
    profile: DegreeProfile
    branch: str
    bound: int
    exponent: Fraction
    tuples_checked: int
    passed: bool
    counterexample: tuple[int, ...] | None


def verify_valuation_inequality(
    profile: DegreeProfile, bound: int, branch: str | None = None
) -> ValuationScanReport:
    """Exhaustively check the divisorial valuation inequality on an integer grid.

    For degree sum > n ("lct" branch) the inequality is

        n*b0 + b1 + ... + br  >=  exponent * min_j (b0*d_j + b_j)

    with the exponent factor equal to the minimal exponent, over
    1 <= b0 <= bound and 0 <= b_j <= bound.  For degree sum <= n the
    scripted resolution never blows up inside the last strict transform, so
    the same inequality is checked with b_r = 0 imposed and the last
    candidate value as the factor
    ("complementary" branch).  Returns the first violating tuple, if any.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    n = profile.n
    d = profile.degrees
    r = profile.r
    actual = LCT_BRANCH if profile.degree_sum > n else COMPLEMENTARY_BRANCH
    if branch is not None and branch != actual:
        raise ValueError(
            f"requested branch {branch!r} but the degree sum {profile.degree_sum} "
            f"vs n = {n} puts this profile in the {actual!r} branch"
        )
    table = exponent_candidates(n, d)
    exponent = table.minimum if actual == LCT_BRANCH else table.values[-1]
    num, den = exponent.numerator, exponent.denominator

    checked = 0
    counterexample = None
    if actual == LCT_BRANCH:
        for b0 in range(1, bound + 1):
            base = n * b0
            scaled = [b0 * dj for dj in d]
            for bs in itertools.product(range(bound + 1), repeat=r):
                checked += 1
                order = min(s + b for s, b in zip(scaled, bs))
                if den * (base + sum(bs)) < num * order:
                    counterexample = (b0,) + bs
                    break
            if counterexample:
                break
    else:
        for b0 in range(1, bound + 1):
            base = n * b0
            scaled = [b0 * dj for dj in d[:-1]]
            cap = b0 * d[-1]
            for bs in itertools.product(range(bound + 1), repeat=r - 1):
                checked += 1
                order = min(
                    min((s + b for s, b in zip(scaled, bs)), default=cap), cap
                )
                if den * (base + sum(bs)) < num * order:
                    counterexample = (b0,) + bs + (0,)
                    break
            if counterexample:
                break
    return ValuationScanReport(
        profile=profile,
        branch=actual,
        bound=bound,
        exponent=exponent,
        tuples_checked=checked,
        passed=counterexample is None,
        counterexample=counterexample,
    )


@dataclass(frozen=True)
class DescentChainReport:
    profile: DegreeProfile
    u: tuple[Fraction, ...]
    chain: tuple[int, ...]            # 1-based indices, strictly increasing, ends at r
    chain_values: tuple[Fraction, ...]
    links_ok: tuple[bool, ...]
    terminal_ok: bool
    passed: bool


def descent_chain(profile: DegreeProfile, u: Sequence) -> DescentChainReport:
    """Evaluate the telescoping chain that lower-bounds normalized valuations.

    Given nonnegative rationals u_1..u_r, the chain picks the largest index
    attaining min_j (d_j + u_j), then repeats on the remaining tail until it
    reaches r.  For a chain index k the chain value is

        (n + k*u_k + sum_{j<=k} (d_k - d_j) + sum_{j>k} u_j) / (d_k + u_k),

    and each value must dominate min(candidate_k, next chain value), with the
    final value dominating min(candidate_r, r).
    """
    n = profile.n
    d = profile.degrees
    r = profile.r
    u = tuple(Fraction(x) for x in u)
    if len(u) != r:
        raise ValueError(f"expected {r} entries, got {len(u)}")
    if any(x < 0 for x in u):
        raise ValueError("entries must be nonnegative")

    vals = [d[j] + u[j] for j in range(r)]
    chain = []
    start = 0
    while True:
        tail_min = min(vals[start:])
        pick = max(j for j in range(start, r) if vals[j] == tail_min)
        chain.append(pick + 1)
        if pick == r - 1:
            break
        start = pick + 1

    chain_values = []
    for idx in chain:
        j0 = idx - 1
        numer = (
            n
            + idx * u[j0]
            + sum(d[j0] - d[j] for j in range(j0 + 1))
            + sum(u[j] for j in range(j0 + 1, r))
        )
        chain_values.append(Fraction(numer, 1) / (d[j0] + u[j0]))

    alphas = exponent_candidates(n, d).values
    links = []
    for q in range(len(chain) - 1):
        bound = min(alphas[chain[q] - 1], chain_values[q + 1])
        links.append(chain_values[q] >= bound)
    terminal_ok = chain_values[-1] >= min(alphas[-1], Fraction(r))
    passed = all(links) and terminal_ok
    return DescentChainReport(
        profile=profile,
        u=u,
        chain=tuple(chain),
        chain_values=tuple(chain_values),
        links_ok=tuple(links),
        terminal_ok=terminal_ok,
        passed=passed,
    )
