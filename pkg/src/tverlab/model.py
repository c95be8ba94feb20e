"""Colored configurations, problem instances, and instance generators.

A ColoredConfig is a finite rational point set with a partition into
color classes; a ProblemInstance stacks k+1 of them for the k-plane
transversal problem.  Partition enumeration is lazy and deterministic:
per class, injections into the piece set in lexicographic order, classes
combined in index order.  Generators produce the matched-size instances
(sizes (r-1)(d-k+1)+1), the tightness counterexamples with one oversized
class, and random seeded instances.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import geometry
from .geometry import Point, as_point

ZERO = Fraction(0)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class ColoredConfig:
    """Point set with a color partition; classes are index tuples."""

    dim: int
    points: tuple[Point, ...]
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "points", tuple(as_point(p) for p in self.points))
        object.__setattr__(
            self, "classes", tuple(tuple(sorted(c)) for c in self.classes)
        )
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError("point dimension mismatch")
        seen: set[int] = set()
        for c in self.classes:
            if not c:
                raise ValueError("color classes must be nonempty")
            for i in c:
                if i in seen:
                    raise ValueError("color classes must be disjoint")
                seen.add(i)
        if seen != set(range(len(self.points))):
            raise ValueError("color classes must cover the points exactly")

    @property
    def size(self) -> int:
        return len(self.points)

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


@dataclass(frozen=True)
class ProblemInstance:
    """k+1 colored collections in R^d, with a piece count per collection."""

    d: int
    k: int
    rs: tuple[int, ...]
    collections: tuple[ColoredConfig, ...]

    def __post_init__(self):
        if not 0 <= self.k <= self.d:
            raise ValueError("need 0 <= k <= d")
        if len(self.collections) != self.k + 1 or len(self.rs) != self.k + 1:
            raise ValueError("need exactly k+1 collections and piece counts")
        if any(r < 2 for r in self.rs):
            raise ValueError("piece counts must be at least 2")
        for cfg in self.collections:
            if cfg.dim != self.d:
                raise ValueError("collection dimension mismatch")


@dataclass(frozen=True)
class PartitionTuple:
    """Ordered assignment of one collection's points to pieces 1..r."""

    pieces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "pieces", tuple(tuple(sorted(p)) for p in self.pieces)
        )


@dataclass(frozen=True)
class HypothesisReport:
    """Which theorem hypotheses an instance satisfies, with details."""

    size_ok: bool
    class_bound_ok: bool
    parity_ok: bool
    prime_ok: bool
    notes: tuple[str, ...] = ()

    @property
    def all_ok(self) -> bool:
        return self.size_ok and self.class_bound_ok and self.parity_ok and self.prime_ok


def required_size(d: int, k: int, r: int) -> int:
    return (r - 1) * (d - k + 1) + 1


def validate(instance: ProblemInstance) -> HypothesisReport:
    """Check the size, class-bound, parity, and primality hypotheses."""
    notes = []
    size_ok = True
    class_bound_ok = True
    prime_ok = True
    for ell, (cfg, r) in enumerate(zip(instance.collections, instance.rs)):
        want = required_size(instance.d, instance.k, r)
        if cfg.size != want:
            size_ok = False
            notes.append(f"collection {ell}: has {cfg.size} points, needs {want}")
        over = [len(c) for c in cfg.classes if len(c) > r - 1]
        if over:
            class_bound_ok = False
            notes.append(f"collection {ell}: class sizes {over} exceed r-1={r - 1}")
        if not _is_prime(r):
            prime_ok = False
            notes.append(f"collection {ell}: r={r} is not prime")
    parity_ok = instance.k == 0 or all(
        r * (instance.d - instance.k) % 2 == 0 for r in instance.rs
    )
    if not parity_ok:
        notes.append(f"r(d-k) odd for some collection and k={instance.k} > 0")
    return HypothesisReport(size_ok, class_bound_ok, parity_ok, prime_ok, tuple(notes))


def is_colorful(config: ColoredConfig, pieces) -> bool:
    """No piece repeats a color: |piece & class| <= 1 for all pairs."""
    for piece in pieces:
        for cls in config.classes:
            if len(set(piece) & set(cls)) > 1:
                return False
    return True


def partition_is_valid(config: ColoredConfig, partition: PartitionTuple, r: int) -> bool:
    """Disjoint, covering, colorful, with exactly r (possibly empty) pieces."""
    pieces = partition.pieces
    if len(pieces) != r:
        return False
    flat = [i for piece in pieces for i in piece]
    if len(flat) != len(set(flat)) or set(flat) != set(range(config.size)):
        return False
    return is_colorful(config, pieces)


def count_colorful_partitions(config: ColoredConfig, r: int) -> int:
    """Closed-form count: product over classes of r!/(r-|class|)!."""
    total = 1
    for c in config.classes:
        if len(c) > r:
            return 0
        f = 1
        for t in range(len(c)):
            f *= r - t
        total *= f
    return total


def enumerate_colorful_partitions(config: ColoredConfig, r: int):
    """Yield every ordered colorful partition tuple, lazily, in a fixed order.

    Pieces may come out empty (they count in the closed form as well);
    solvers skip those since an empty hull supports no certificate.
    """
    if any(len(c) > r for c in config.classes):
        return
    injections = [
        list(itertools.permutations(range(r), len(c))) for c in config.classes
    ]
    for combo in itertools.product(*injections):
        pieces: list[list[int]] = [[] for _ in range(r)]
        for cls, assign in zip(config.classes, combo):
            for point_idx, piece_idx in zip(cls, assign):
                pieces[piece_idx].append(point_idx)
        yield PartitionTuple(tuple(tuple(p) for p in pieces))


def default_profile(d: int, k: int, r: int) -> tuple[int, ...]:
    """Extremal class profile: d-k+1 classes of size r-1 plus a singleton."""
    return tuple([r - 1] * (d - k + 1) + [1])


def _classes_from_profile(profile) -> tuple[tuple[int, ...], ...]:
    classes = []
    idx = 0
    for size in profile:
        classes.append(tuple(range(idx, idx + size)))
        idx += size
    return tuple(classes)


def tightness_instance(d: int, k: int, rs, ell_star: int) -> ProblemInstance:
    """Instance showing the class bound r-1 cannot be raised.

    Collection ell lives on its own (d-k)-flat; the flats are parallel
    and project to the vertices of a k-simplex.  Each collection is r-1
    coincident points per vertex of a (d-k)-simplex plus its barycenter,
    whose only valid partition point is that barycenter.  Collection
    ell_star carries one class of size r (the r-1 points at vertex 0
    plus one point at vertex 1), which no colorful partition can split.
    """
    rs = tuple(rs)
    m = d - k
    if m < 1:
        raise ValueError("need k < d")
    if len(rs) != k + 1 or any(r < 2 for r in rs):
        raise ValueError("need k+1 piece counts, all at least 2")
    if not 0 <= ell_star <= k:
        raise ValueError("oversized-class collection out of range")

    def jitter(ell, i, c):
        if k == 0:
            return ZERO
        return Fraction((17 * ell + 31 * i + 47 * c + 13) % 89 - 44, 97)

    collections = []
    for ell, r in enumerate(rs):
        verts = []
        for i in range(m + 1):
            v = [jitter(ell, i, c) for c in range(m)]
            if i > 0:
                v[i - 1] += 4
            verts.append(v)
        if geometry.affine_dim(verts) != m:
            raise ValueError("degenerate simplex after perturbation")
        center = [sum(v[c] for v in verts) / (m + 1) for c in range(m)]
        offset = [ZERO] * k
        if ell > 0:
            offset[ell - 1] = Fraction(1)
        pts = []
        for v in verts:
            for _ in range(r - 1):
                pts.append(tuple(v) + tuple(offset))
        pts.append(tuple(center) + tuple(offset))
        if ell == ell_star:
            # r-1 copies at vertex 0, plus the first copy at vertex 1
            big = tuple(range(r - 1)) + (r - 1,)
            rest = [(i,) for i in range(len(pts)) if i not in big]
            classes = (big, *rest)
        else:
            classes = tuple((i,) for i in range(len(pts)))
        collections.append(ColoredConfig(dim=d, points=tuple(pts), classes=classes))
    return ProblemInstance(d=d, k=k, rs=rs, collections=tuple(collections))


def lift_instance(instance: ProblemInstance, r_new: int | None = None) -> ProblemInstance:
    """Embed a (d-1, k-1)-instance into (d, k) by adding a clustered collection.

    Existing points gain a trailing 0 coordinate.  The new collection
    sits near (0,...,0,1): point i is offset by (i*eps, 0,...,0, i^2*eps^2)
    with eps = 1/1000, every point its own color, so its hull misses the
    hyperplane x_d = 0 and any produced plane restricts to a solution of
    the input (see solver.restrict_solution).
    """
    if r_new is None:
        r_new = instance.rs[-1]
    if r_new < 2:
        raise ValueError("piece count must be at least 2")
    d = instance.d + 1
    k = instance.k + 1
    eps = Fraction(1, 1000)
    lifted = []
    for cfg in instance.collections:
        pts = tuple(p + (ZERO,) for p in cfg.points)
        lifted.append(ColoredConfig(dim=d, points=pts, classes=cfg.classes))
    size = required_size(d, k, r_new)
    cluster = []
    for i in range(size):
        p = [ZERO] * d
        p[0] = i * eps
        p[-1] = 1 + i * i * eps * eps
        cluster.append(tuple(p))
    new_cfg = ColoredConfig(
        dim=d,
        points=tuple(cluster),
        classes=tuple((i,) for i in range(size)),
    )
    return ProblemInstance(
        d=d, k=k, rs=instance.rs + (r_new,), collections=tuple(lifted) + (new_cfg,)
    )


def random_instance(
    d: int,
    k: int,
    rs,
    profiles=None,
    seed: int = 0,
    grid: int = 1000,
    jitter_q: int | None = None,
) -> ProblemInstance:
    """Seeded instance on the integer grid [-grid, grid]^d.

    profiles gives per-collection class-size tuples; default is the
    extremal profile.  Sizes must respect the r-1 class bound and sum to
    the required collection size.  jitter_q adds a deterministic rational
    offset with denominator jitter_q to every coordinate.
    """
    rs = tuple(rs)
    if len(rs) != k + 1:
        raise ValueError("need k+1 piece counts")
    if profiles is None:
        profiles = tuple(default_profile(d, k, r) for r in rs)
    profiles = tuple(tuple(p) for p in profiles)
    if len(profiles) != k + 1:
        raise ValueError("need one class profile per collection")
    rng = random.Random(seed)
    collections = []
    for r, profile in zip(rs, profiles):
        want = required_size(d, k, r)
        if sum(profile) != want:
            raise ValueError(f"profile sums to {sum(profile)}, needs {want}")
        if any(not 1 <= s <= r - 1 for s in profile):
            raise ValueError("class sizes must lie in [1, r-1]")
        pts = []
        for _ in range(want):
            coords = [Fraction(rng.randint(-grid, grid)) for _ in range(d)]
            if jitter_q:
                coords = [c + Fraction(rng.randint(0, jitter_q - 1), jitter_q) for c in coords]
            pts.append(tuple(coords))
        collections.append(
            ColoredConfig(dim=d, points=tuple(pts), classes=_classes_from_profile(profile))
        )
    return ProblemInstance(d=d, k=k, rs=rs, collections=tuple(collections))
