"""Searches for common points and transversal planes, with exact certificates.

Three search modes, all exact:

* `solve_tverberg` — exhaustive over colorful partitions of one collection,
  one rational LP per partition; complete.
* `solve_transversal` — samples direction subspaces for a k-plane (rational
  rotations from a low-discrepancy stream), then certifies membership per
  direction with one joint LP per partition combination; augmented with
  exact snap directions through point pairs and a local refinement loop.
  Incomplete by nature, but every returned certificate is exact.
* `solve_hyperplane_transversal_exact` — complete disjunctive search when
  the plane has codimension one.

Certificates carry convex weights and witness points so verification never
repeats the search.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import CapExceeded, DegenerateIntersection, PreconditionError
from .geometry import Point, Verdict, as_point, common_point_gap, lp_solve_eq
from .model import (
    ColoredConfig,
    PartitionTuple,
    ProblemInstance,
    enumerate_colorful_partitions,
    validate,
)

ZERO = Fraction(0)
ONE = Fraction(1)

_BLOCK = 512
_SNAP_CAP = 4096
_FIRST_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class KPlane:
    """Affine plane: base point plus the span of `directions`."""

    base: Point
    directions: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "base", as_point(self.base))
        object.__setattr__(
            self, "directions", tuple(as_point(v) for v in self.directions)
        )
        d = len(self.base)
        if any(len(v) != d for v in self.directions):
            raise ValueError("direction dimension mismatch")
        if self.directions and linalg.rank([list(v) for v in self.directions]) != len(
            self.directions
        ):
            raise ValueError("directions must be linearly independent")

    @property
    def ambient_dim(self) -> int:
        return len(self.base)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def contains(self, point) -> bool:
        p = as_point(point)
        if len(p) != self.ambient_dim:
            return False
        delta = [a - b for a, b in zip(p, self.base)]
        if not self.directions:
            return all(v == 0 for v in delta)
        matrix = [[v[c] for v in self.directions] for c in range(self.ambient_dim)]
        return linalg.solve(matrix, delta) is not None


@dataclass(frozen=True)
class TverbergCertificate:
    """A colorful partition whose piece hulls share `point`."""

    point: Point
    partition: PartitionTuple
    weights: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class TransversalCertificate:
    """One partition per collection and a k-plane meeting every piece hull."""

    plane: KPlane
    partitions: tuple[PartitionTuple, ...]
    weights: tuple[tuple[tuple[Fraction, ...], ...], ...]
    witness_points: tuple[tuple[Point, ...], ...]


@dataclass(frozen=True)
class SearchBudget:
    """Knobs for the sampling search; exhaustive modes ignore it."""

    samples: int = 10_000
    refinement_depth: int = 6
    seed: int = 0


@dataclass
class SolveReport:
    """Outcome of one search: status, certificate if any, best gap, stats.

    status is one of "certified", "infeasible-exhausted" (complete search
    ruled a certificate out), "budget-exhausted" (sampling gave up), or
    "no-valid-partition" (some collection has no nonempty colorful
    partition at all).  gap is the smallest constraint violation seen,
    zero when certified.
    """

    status: str
    certificate: object | None = None
    gap: Fraction | None = None
    stats: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == "certified"


# ---------------------------------------------------------------------------
# exhaustive common-point search (0-dimensional planes)


def _nonempty_partitions(config: ColoredConfig, r: int):
    return [
        part
        for part in enumerate_colorful_partitions(config, r)
        if all(part.pieces)
    ]


def solve_tverberg(config: ColoredConfig, r: int) -> SolveReport:
    """Try every nonempty colorful partition; complete, deterministic."""
    if r < 2:
        raise ValueError("need at least two pieces")
    stats = {"partitions": 0, "lps": 0}
    best_gap = None
    for part in enumerate_colorful_partitions(config, r):
        if not all(part.pieces):
            continue
        stats["partitions"] += 1
        pieces = [[config.points[i] for i in piece] for piece in part.pieces]
        witness, gap = common_point_gap(pieces)
        stats["lps"] += 1
        if witness is not None:
            cert = TverbergCertificate(
                point=witness.point, partition=part, weights=witness.weights
            )
            return SolveReport("certified", cert, ZERO, stats)
        if best_gap is None or gap < best_gap:
            best_gap = gap
    if stats["partitions"] == 0:
        return SolveReport("no-valid-partition", None, None, stats)
    return SolveReport("infeasible-exhausted", None, best_gap, stats)


# ---------------------------------------------------------------------------
# direction sampling machinery


def _halton(index: int, base: int) -> Fraction:
    f = ONE
    r = ZERO
    i = index
    while i > 0:
        f /= base
        r += f * (i % base)
        i //= base
    return r


def _rotation_matrix(d: int, k: int, params) -> list[list[Fraction]]:
    """Orthogonal d x d matrix from tan-half-angle plane rotations.

    One parameter per (row-block, column-block) pair, so the first k
    columns sweep the full space of k-dimensional direction subspaces.
    """
    m = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
    idx = 0
    for i in range(k):
        for j in range(k, d):
            t = params[idx]
            idx += 1
            den = 1 + t * t
            c = (1 - t * t) / den
            s = 2 * t / den
            for row in m:
                a, b = row[i], row[j]
                row[i] = a * c + b * s
                row[j] = b * c - a * s
    return m


def _quotient_from_params(d: int, k: int, params):
    """Rows spanning the orthogonal complement of the sampled subspace."""
    m = _rotation_matrix(d, k, params)
    return [[m[coord][k + c] for coord in range(d)] for c in range(d - k)]


def _project(q_rows, point):
    return tuple(
        sum((r[c] * point[c] for c in range(len(point))), ZERO) for r in q_rows
    )


def _snap_quotients(instance: ProblemInstance):
    """Exact line directions through pairs of input points (planar case).

    Only for d=2, k=1: a transversal line that must pass through two of
    the input points has an isolated direction that no amount of
    sampling hits, so those directions are enumerated outright.  Each
    pair yields the quotient row orthogonal to the connecting segment,
    reduced to a primitive integer vector.
    """
    if instance.d != 2 or instance.k != 1:
        return []
    pts = [p for cfg in instance.collections for p in cfg.points]
    seen = set()
    out = []
    for a, b in itertools.combinations(pts, 2):
        ux, uy = a[0] - b[0], a[1] - b[1]
        if ux == 0 and uy == 0:
            continue
        row = (-uy, ux)
        scale = gcd(row[0].denominator, row[1].denominator)
        scale = (row[0].denominator * row[1].denominator) // scale
        ints = [int(v * scale) for v in row]
        g = gcd(ints[0], ints[1])
        ints = [v // g for v in ints]
        if ints[0] < 0 or (ints[0] == 0 and ints[1] < 0):
            ints = [-v for v in ints]
        key = tuple(ints)
        if key in seen:
            continue
        seen.add(key)
        out.append([[Fraction(v) for v in key]])
        if len(out) >= _SNAP_CAP:
            break
    return out


def _evaluate_direction(q_rows, collections, partitions_per_col, stats):
    """(certificate pieces, gap) for one quotient; gap 0 on success.

    Prefilters each collection alone, then runs one joint LP per
    combination of surviving partitions.  The returned gap is the sum of
    per-collection minima when the prefilter rules the direction out,
    else the smallest joint violation.
    """
    proj = [
        [_project(q_rows, p) for p in cfg.points] for cfg in collections
    ]
    survivors = []
    prefail_gap = ZERO
    failed = False
    for ell, plist in enumerate(partitions_per_col):
        good = []
        gmin = None
        for part in plist:
            pieces = [[proj[ell][i] for i in piece] for piece in part.pieces]
            witness, gap = common_point_gap(pieces)
            stats["lps"] += 1
            if witness is not None:
                good.append(part)
            elif gmin is None or gap < gmin:
                gmin = gap
        survivors.append(good)
        if not good:
            failed = True
            prefail_gap += gmin
    if failed:
        return None, prefail_gap
    best = None
    for combo in itertools.product(*survivors):
        pooled = []
        for ell, part in enumerate(combo):
            for piece in part.pieces:
                pooled.append([proj[ell][i] for i in piece])
        witness, gap = common_point_gap(pooled)
        stats["lps"] += 1
        if witness is not None:
            return (combo, witness), ZERO
        if best is None or gap < best:
            best = gap
    return None, best


def _build_certificate(instance, q_rows, combo, witness) -> TransversalCertificate:
    d, k = instance.d, instance.k
    if d - k == 0:
        base = tuple(ZERO for _ in range(d))
        dirs = tuple(
            tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d)
        )
    else:
        particular, null = linalg.solve(
            [list(r) for r in q_rows], list(witness.point)
        )
        base = tuple(particular)
        dirs = tuple(tuple(v) for v in null)
    plane = KPlane(base=base, directions=dirs)
    weights = []
    points = []
    flat = iter(witness.weights)
    for ell, part in enumerate(combo):
        cfg = instance.collections[ell]
        col_w = []
        col_p = []
        for piece in part.pieces:
            w = next(flat)
            col_w.append(tuple(w))
            pts = [cfg.points[i] for i in piece]
            col_p.append(
                tuple(
                    sum((wi * p[c] for wi, p in zip(w, pts)), ZERO)
                    for c in range(d)
                )
            )
        weights.append(tuple(col_w))
        points.append(tuple(col_p))
    return TransversalCertificate(
        plane=plane,
        partitions=tuple(combo),
        weights=tuple(weights),
        witness_points=tuple(points),
    )


def solve_transversal(
    instance: ProblemInstance, budget: SearchBudget | None = None
) -> SolveReport:
    """Sampled search for a k-plane meeting one piece hull per partition slot.

    Snap directions run first (they are exact and cover planes pinned to
    point pairs), then low-discrepancy direction samples in blocks, with
    a halving local refinement around the best near-miss between blocks.
    A returned certificate is exact regardless of how its direction was
    found; failure only means the budget ran out.
    """
    budget = budget or SearchBudget()
    d, k = instance.d, instance.k
    stats = {
        "lps": 0,
        "directions": 0,
        "snap_directions": 0,
        "halton_samples": 0,
        "refinement_rounds": 0,
    }
    partitions_per_col = [
        _nonempty_partitions(cfg, r)
        for cfg, r in zip(instance.collections, instance.rs)
    ]
    if any(not plist for plist in partitions_per_col):
        return SolveReport("no-valid-partition", None, None, stats)

    best_gap = None

    def attempt(q_rows):
        nonlocal best_gap
        stats["directions"] += 1
        hit, gap = _evaluate_direction(
            q_rows, instance.collections, partitions_per_col, stats
        )
        if hit is not None:
            combo, witness = hit
            cert = _build_certificate(instance, q_rows, combo, witness)
            return SolveReport("certified", cert, ZERO, stats), ZERO
        if best_gap is None or gap < best_gap:
            best_gap = gap
        return None, gap

    nparams = k * (d - k)
    if nparams == 0:
        # a 0-plane in the full quotient, or the whole space: one direction
        report, _ = attempt(_quotient_from_params(d, k, ()))
        return report or SolveReport("budget-exhausted", None, best_gap, stats)

    for q_rows in _snap_quotients(instance):
        stats["snap_directions"] += 1
        report, _ = attempt(q_rows)
        if report:
            return report

    bases = _FIRST_BASES[:nparams]
    best_params = None
    best_param_gap = None

    def attempt_params(params):
        nonlocal best_params, best_param_gap
        report, gap = attempt(_quotient_from_params(d, k, params))
        if report:
            return report
        if best_param_gap is None or gap < best_param_gap:
            best_param_gap = gap
            best_params = params
        return None

    emitted = 0
    step = Fraction(1, 4)
    rounds_left = budget.refinement_depth

    def refine_round():
        nonlocal step
        stats["refinement_rounds"] += 1
        for a in range(nparams):
            for sgn in (1, -1):
                tweaked = list(best_params)
                tweaked[a] += sgn * step
                report = attempt_params(tuple(tweaked))
                if report:
                    return report
        step /= 2
        return None

    while emitted < budget.samples:
        block = min(_BLOCK, budget.samples - emitted)
        for i in range(block):
            idx = budget.seed + emitted + i + 1
            params = tuple(2 * _halton(idx, b) - 1 for b in bases)
            stats["halton_samples"] += 1
            report = attempt_params(params)
            if report:
                return report
        emitted += block
        if rounds_left > 0 and best_params is not None:
            rounds_left -= 1
            report = refine_round()
            if report:
                return report
    while rounds_left > 0 and best_params is not None:
        rounds_left -= 1
        report = refine_round()
        if report:
            return report
    return SolveReport("budget-exhausted", None, best_gap, stats)


# ---------------------------------------------------------------------------
# complete search for codimension-one planes


def solve_hyperplane_transversal_exact(
    instance: ProblemInstance, choice_cap: int = 5_000_000
) -> SolveReport:
    """Complete hyperplane-transversal search via a finite disjunction.

    A hyperplane {a.x = b} meets a hull iff some ordered vertex pair
    (v-, v+) satisfies a.v- <= b <= a.v+, and the normal can be scaled
    so its largest coordinate is +1 (ordered pairs absorb the sign
    flip).  Enumerating the pair per piece, the unit coordinate, and the
    partition combination leaves small LPs over the remaining normal
    coordinates in [-1,1] and the free offset.  Raises CapExceeded when
    the number of disjuncts would pass `choice_cap`.
    """
    d, k = instance.d, instance.k
    if k != d - 1:
        raise PreconditionError("complete search needs plane codimension one")
    stats = {"lps": 0, "combos": 0}
    partitions_per_col = [
        _nonempty_partitions(cfg, r)
        for cfg, r in zip(instance.collections, instance.rs)
    ]
    if any(not plist for plist in partitions_per_col):
        return SolveReport("no-valid-partition", None, None, stats)
    total = d
    for plist in partitions_per_col:
        per_col = 0
        for part in plist:
            w = 1
            for piece in part.pieces:
                w *= len(piece) ** 2
            per_col += w
        total *= per_col
    if total > choice_cap:
        raise CapExceeded(
            f"hyperplane search needs {total} disjuncts, cap is {choice_cap}"
        )

    best_gap = None
    for combo in itertools.product(*partitions_per_col):
        stats["combos"] += 1
        piece_pts = []
        for ell, part in enumerate(combo):
            cfg = instance.collections[ell]
            for piece in part.pieces:
                piece_pts.append([cfg.points[i] for i in piece])
        pair_ranges = [
            itertools.product(range(len(pts)), repeat=2) for pts in piece_pts
        ]
        for pairs in itertools.product(*[list(r) for r in pair_ranges]):
            for unit in range(d):
                hit, gap = _hyperplane_lp(piece_pts, pairs, unit, stats)
                if hit is not None:
                    a_vec, beta = hit
                    cert = _hyperplane_certificate(
                        instance, combo, piece_pts, pairs, a_vec, beta
                    )
                    return SolveReport("certified", cert, ZERO, stats)
                if gap is not None and (best_gap is None or gap < best_gap):
                    best_gap = gap
    return SolveReport("infeasible-exhausted", None, best_gap, stats)


def _hyperplane_lp(piece_pts, pairs, unit, stats):
    """Feasibility of one disjunct; returns ((a, beta), None) or (None, gap)."""
    d = len(piece_pts[0][0])
    other = [c for c in range(d) if c != unit]
    m = len(piece_pts)
    # variables: u_c (shifted normal coords), s_c (their upper-bound
    # slacks), beta+, beta-, then lower/upper slacks per piece
    width = 2 * len(other) + 2 + 2 * m
    rows = []
    rhs = []
    for ci, _c in enumerate(other):
        row = [ZERO] * width
        row[ci] = ONE
        row[len(other) + ci] = ONE
        rows.append(row)
        rhs.append(Fraction(2))
    bp = 2 * len(other)
    bm = bp + 1
    for j, (lo, hi) in enumerate(pairs):
        vlo = piece_pts[j][lo]
        vhi = piece_pts[j][hi]
        row = [ZERO] * width
        for ci, c in enumerate(other):
            row[ci] = vlo[c]
        row[bp] = -ONE
        row[bm] = ONE
        row[bp + 2 + 2 * j] = ONE
        rows.append(row)
        rhs.append(sum(vlo[c] for c in other) - vlo[unit])
        row = [ZERO] * width
        for ci, c in enumerate(other):
            row[ci] = -vhi[c]
        row[bp] = ONE
        row[bm] = -ONE
        row[bp + 2 + 2 * j + 1] = ONE
        rows.append(row)
        rhs.append(vhi[unit] - sum(vhi[c] for c in other))
    x, gap = lp_solve_eq(rows, rhs)
    stats["lps"] += 1
    if x is None:
        return None, gap
    a_vec = [ZERO] * d
    a_vec[unit] = ONE
    for ci, c in enumerate(other):
        a_vec[c] = x[ci] - 1
    beta = x[bp] - x[bm]
    return (tuple(a_vec), beta), None


def _hyperplane_certificate(instance, combo, piece_pts, pairs, a_vec, beta):
    d = instance.d
    particular, null = linalg.solve([list(a_vec)], [beta])
    plane = KPlane(base=tuple(particular), directions=tuple(tuple(v) for v in null))
    weights = []
    points = []
    j = 0
    for ell, part in enumerate(combo):
        col_w = []
        col_p = []
        for piece in part.pieces:
            pts = piece_pts[j]
            lo, hi = pairs[j]
            vlo, vhi = pts[lo], pts[hi]
            alo = sum(a * v for a, v in zip(a_vec, vlo))
            ahi = sum(a * v for a, v in zip(a_vec, vhi))
            t = ZERO if ahi == alo else (beta - alo) / (ahi - alo)
            w = [ZERO] * len(pts)
            w[lo] += 1 - t
            w[hi] += t
            col_w.append(tuple(w))
            col_p.append(
                tuple(vlo[c] + t * (vhi[c] - vlo[c]) for c in range(d))
            )
            j += 1
        weights.append(tuple(col_w))
        points.append(tuple(col_p))
    return TransversalCertificate(
        plane=plane,
        partitions=tuple(combo),
        weights=tuple(weights),
        witness_points=tuple(points),
    )


# ---------------------------------------------------------------------------
# verification


def verify_tverberg(config: ColoredConfig, r: int, cert) -> Verdict:
    """Re-check a common-point certificate from scratch, exactly."""
    from .model import partition_is_valid

    if not isinstance(cert, TverbergCertificate):
        return Verdict(False, "malformed")
    part = cert.partition
    if not partition_is_valid(config, part, r):
        return Verdict(False, "bad-partition")
    if not all(part.pieces):
        return Verdict(False, "empty-piece")
    if len(cert.weights) != len(part.pieces):
        return Verdict(False, "shape-mismatch")
    point = as_point(cert.point)
    if len(point) != config.dim:
        return Verdict(False, "shape-mismatch")
    for piece, w in zip(part.pieces, cert.weights):
        if len(w) != len(piece):
            return Verdict(False, "shape-mismatch")
        if any(v < 0 for v in w):
            return Verdict(False, "negative-weight")
        if sum(w) != 1:
            return Verdict(False, "weight-sum")
        combo = tuple(
            sum((wi * config.points[i][c] for wi, i in zip(w, piece)), ZERO)
            for c in range(config.dim)
        )
        if combo != point:
            return Verdict(False, "point-mismatch")
    return Verdict(True)


def verify_transversal(instance: ProblemInstance, cert) -> Verdict:
    """Re-check a transversal certificate from scratch, exactly."""
    from .model import partition_is_valid

    d, k = instance.d, instance.k
    if not isinstance(cert, TransversalCertificate):
        return Verdict(False, "malformed")
    try:
        plane = cert.plane
        if plane.ambient_dim != d or plane.dim != k:
            return Verdict(False, "bad-plane")
    except (TypeError, ValueError, AttributeError):
        return Verdict(False, "malformed")
    if (
        len(cert.partitions) != k + 1
        or len(cert.weights) != k + 1
        or len(cert.witness_points) != k + 1
    ):
        return Verdict(False, "shape-mismatch")
    for ell in range(k + 1):
        cfg = instance.collections[ell]
        part = cert.partitions[ell]
        if not partition_is_valid(cfg, part, instance.rs[ell]):
            return Verdict(False, "bad-partition")
        if not all(part.pieces):
            return Verdict(False, "empty-piece")
        ws = cert.weights[ell]
        pts = cert.witness_points[ell]
        if len(ws) != len(part.pieces) or len(pts) != len(part.pieces):
            return Verdict(False, "shape-mismatch")
        for piece, w, x in zip(part.pieces, ws, pts):
            if len(w) != len(piece):
                return Verdict(False, "shape-mismatch")
            if any(v < 0 for v in w):
                return Verdict(False, "negative-weight")
            if sum(w) != 1:
                return Verdict(False, "weight-sum")
            combo = tuple(
                sum((wi * cfg.points[i][c] for wi, i in zip(w, piece)), ZERO)
                for c in range(d)
            )
            if combo != tuple(x):
                return Verdict(False, "point-mismatch")
            if not plane.contains(x):
                return Verdict(False, "witness-off-plane")
    return Verdict(True)


# ---------------------------------------------------------------------------
# restriction to a coordinate hyperplane


def restrict_solution(instance: ProblemInstance, cert: TransversalCertificate):
    """Intersect a certified plane with {last coordinate = 0}.

    The input certifies a lifted instance whose final collection is the
    off-hyperplane cluster; dropping that collection and cutting the
    plane yields a certificate one dimension down: a TverbergCertificate
    when the cut plane is a single point, else a TransversalCertificate.
    Raises DegenerateIntersection when the plane misses the hyperplane
    or lies inside it.
    """
    if not isinstance(cert, TransversalCertificate):
        raise PreconditionError("restriction needs a transversal certificate")
    d, k = instance.d, instance.k
    plane = cert.plane
    last = [v[d - 1] for v in plane.directions]
    if all(v == 0 for v in last):
        if plane.base[d - 1] == 0:
            raise DegenerateIntersection("plane lies inside the hyperplane")
        raise DegenerateIntersection("plane misses the hyperplane")
    sol = linalg.solve([last], [-plane.base[d - 1]])
    t0, null = sol
    new_base = tuple(
        plane.base[c] + sum(t * v[c] for t, v in zip(t0, plane.directions))
        for c in range(d - 1)
    )
    new_dirs = tuple(
        tuple(
            sum(n[a] * plane.directions[a][c] for a in range(len(t0)))
            for c in range(d - 1)
        )
        for n in null
    )
    kept = len(cert.partitions) - 1
    for ell in range(kept):
        for x in cert.witness_points[ell]:
            if x[d - 1] != 0:
                raise PreconditionError(
                    "witness of a kept collection is off the hyperplane"
                )
    dropped_pts = tuple(
        tuple(tuple(x[:-1]) for x in col) for col in cert.witness_points[:kept]
    )
    if kept == 1 and k - 1 == 0:
        points = {p for col in dropped_pts for p in col}
        if len(points) != 1:
            raise DegenerateIntersection(
                "witnesses do not meet in a single point"
            )
        return TverbergCertificate(
            point=next(iter(points)),
            partition=cert.partitions[0],
            weights=cert.weights[0],
        )
    return TransversalCertificate(
        plane=KPlane(base=new_base, directions=new_dirs),
        partitions=cert.partitions[:kept],
        weights=cert.weights[:kept],
        witness_points=dropped_pts,
    )


# ---------------------------------------------------------------------------
# batch runs


@dataclass(frozen=True)
class SweepOutcome:
    seed: int
    status: str
    label: str
    hypotheses_ok: bool
    gap: Fraction | None


@dataclass
class SweepReport:
    outcomes: tuple[SweepOutcome, ...]
    counts: dict[str, int]

    @property
    def certified(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "certified")


def sweep(
    d: int,
    k: int,
    rs,
    profiles,
    trials: int,
    seed: int = 0,
    budget: SearchBudget | None = None,
    jitter_q: int | None = None,
    method: str = "auto",
) -> SweepReport:
    """Solve `trials` seeded random instances and tally labeled outcomes.

    Trial i uses seed+i, so a sweep is reproducible and individual
    trials can be re-run alone.  Labels append "-beyond-theorem" when an
    instance violates the guarantee hypotheses, since a miss there is
    expected rather than diagnostic.
    """
    from .model import random_instance

    if method not in ("auto", "sample", "exact"):
        raise ValueError("method must be auto, sample, or exact")
    outcomes = []
    counts: dict[str, int] = {}
    for i in range(trials):
        inst = random_instance(d, k, rs, profiles, seed=seed + i, jitter_q=jitter_q)
        hyp_ok = validate(inst).all_ok
        if k == 0 and method in ("auto", "exact"):
            report = solve_tverberg(inst.collections[0], rs[0])
        elif method == "exact":
            report = solve_hyperplane_transversal_exact(inst)
        else:
            trial_budget = budget or SearchBudget()
            trial_budget = SearchBudget(
                samples=trial_budget.samples,
                refinement_depth=trial_budget.refinement_depth,
                seed=trial_budget.seed + i,
            )
            report = solve_transversal(inst, trial_budget)
        label = {
            "certified": "certified",
            "infeasible-exhausted": "refuted",
            "budget-exhausted": "undetermined",
            "no-valid-partition": "refuted",
        }[report.status]
        if not hyp_ok:
            label += "-beyond-theorem"
        counts[label] = counts.get(label, 0) + 1
        outcomes.append(
            SweepOutcome(
                seed=seed + i,
                status=report.status,
                label=label,
                hypotheses_ok=hyp_ok,
                gap=report.gap,
            )
        )
    return SweepReport(outcomes=tuple(outcomes), counts=counts)
