"""Chessboard complexes, joins, mod-p homology, and the weight-map degree.

The combinatorial objects here are small and explicit: a complex is its
facet list, faces are sorted vertex tuples, boundary maps use the
alternating-sign convention on sorted vertices.  The degree computation
at the end certifies the piecewise-linear weight map from a join of
chessboard complexes onto a sphere by exact signed counting of the
preimages of one regular value; no floating point, no normalisation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import CapExceeded, PreconditionError

FACET_CAP = 10**7


class SimplicialComplex:
    """Finite abstract simplicial complex given by its facets.

    Vertices are 0..n_vertices-1.  Facets must be inclusion-maximal;
    faces of every dimension are derived on demand and cached.
    """

    def __init__(self, n_vertices: int, facets):
        self.n_vertices = n_vertices
        canon = sorted({tuple(sorted(f)) for f in facets})
        if not canon:
            raise ValueError("a complex needs at least one facet")
        if len(canon) > FACET_CAP:
            raise CapExceeded(f"facet count {len(canon)} exceeds cap {FACET_CAP}")
        for f in canon:
            if any(v < 0 or v >= n_vertices for v in f):
                raise ValueError("facet vertex out of range")
            if len(set(f)) != len(f):
                raise ValueError("facet repeats a vertex")
        sets = [frozenset(f) for f in canon]
        for i, fi in enumerate(sets):
            for j, fj in enumerate(sets):
                if i != j and fi < fj:
                    raise ValueError("facet list is not inclusion-maximal")
        self.facets = tuple(canon)
        self._faces: dict[int, tuple] | None = None

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def faces_by_dim(self):
        """dict: dimension -> sorted tuple of faces (nonempty only)."""
        if self._faces is None:
            table: dict[int, set] = {}
            for f in self.facets:
                for size in range(1, len(f) + 1):
                    bucket = table.setdefault(size - 1, set())
                    bucket.update(itertools.combinations(f, size))
            self._faces = {d: tuple(sorted(s)) for d, s in table.items()}
        return self._faces

    def f_vector(self) -> tuple[int, ...]:
        faces = self.faces_by_dim()
        return tuple(len(faces[d]) for d in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def all_faces(self):
        faces = self.faces_by_dim()
        for d in range(self.dim + 1):
            yield from faces.get(d, ())

    def __repr__(self):
        return f"SimplicialComplex(n={self.n_vertices}, facets={len(self.facets)}, dim={self.dim})"


def chessboard_complex(rows: int, cols: int) -> SimplicialComplex:
    """Complex of non-attacking rook placements on a rows x cols board.

    Vertex (i, j) gets id i*cols + j.  Faces are partial matchings; the
    facets are the placements of min(rows, cols) rooks.
    """
    if rows < 1 or cols < 1:
        raise ValueError("board sides must be positive")
    facets = []
    if cols <= rows:
        for perm in itertools.permutations(range(rows), cols):
            facets.append(tuple(sorted(perm[j] * cols + j for j in range(cols))))
    else:
        for perm in itertools.permutations(range(cols), rows):
            facets.append(tuple(sorted(i * cols + perm[i] for i in range(rows))))
    return SimplicialComplex(rows * cols, facets)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; b's vertices are shifted past a's."""
    off = a.n_vertices
    facets = [
        fa + tuple(v + off for v in fb)
        for fa in a.facets
        for fb in b.facets
    ]
    if len(facets) > FACET_CAP:
        raise CapExceeded("join facet count exceeds cap")
    return SimplicialComplex(a.n_vertices + b.n_vertices, facets)


# ---------------------------------------------------------------------------
# homology mod p


def _rank_mod_p(rows, p):
    """Rank of an integer matrix over GF(p); rows is a list of lists."""
    if not rows or not rows[0]:
        return 0
    m = [[v % p for v in row] for row in rows]
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def boundary_matrix(complex_: SimplicialComplex, d: int):
    """Matrix of the boundary map from d-faces to (d-1)-faces (integer signs)."""
    faces = complex_.faces_by_dim()
    lower = {f: i for i, f in enumerate(faces[d - 1])}
    upper = faces[d]
    mat = [[0] * len(upper) for _ in range(len(lower))]
    for j, face in enumerate(upper):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1 :]
            mat[lower[sub]][j] = (-1) ** pos
    return mat


@dataclass(frozen=True)
class ChainComplexModP:
    """Boundary matrices over GF(p), with the composite checked to be zero."""

    p: int
    face_counts: tuple[int, ...]
    boundaries: tuple  # boundaries[i] maps i-faces to (i-1)-faces, i >= 1

    def __post_init__(self):
        for d in range(2, len(self.face_counts)):
            a = self.boundaries[d - 1]
            b = self.boundaries[d]
            if not a or not b:
                continue
            for j in range(len(b[0])):
                col = [sum(a[i][t] * b[t][j] for t in range(len(b))) % self.p for i in range(len(a))]
                if any(col):
                    raise AssertionError("boundary of boundary is nonzero")


def chain_complex_mod_p(complex_: SimplicialComplex, p: int) -> ChainComplexModP:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    counts = complex_.f_vector()
    boundaries = [None]
    for d in range(1, complex_.dim + 1):
        boundaries.append(boundary_matrix(complex_, d))
    return ChainComplexModP(p, counts, tuple(boundaries))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def homology_mod_p(complex_: SimplicialComplex, p: int) -> tuple[int, ...]:
    """Unreduced Betti numbers over GF(p), dimensions 0..dim."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    counts = complex_.f_vector()
    ranks = [0] * (complex_.dim + 2)
    for d in range(1, complex_.dim + 1):
        ranks[d] = _rank_mod_p(boundary_matrix(complex_, d), p)
    return tuple(
        counts[d] - ranks[d] - ranks[d + 1] for d in range(complex_.dim + 1)
    )


# ---------------------------------------------------------------------------
# pseudo-manifold structure and orientation


@dataclass(frozen=True)
class PseudoManifoldReport:
    ok: bool
    pure: bool
    connected: bool
    bad_ridges: tuple = ()

    def __bool__(self):
        return self.ok


def _ridges_of(facet):
    for pos in range(len(facet)):
        yield facet[:pos] + facet[pos + 1 :]


def is_pseudo_manifold(complex_: SimplicialComplex) -> PseudoManifoldReport:
    """Pure, every ridge in exactly two facets, facet-ridge graph connected.

    The report lists the offending ridges when the middle condition
    fails, which doubles as a boundary detector.
    """
    if not complex_.is_pure():
        return PseudoManifoldReport(ok=False, pure=False, connected=False)
    ridge_map: dict[tuple, list[int]] = {}
    for fi, facet in enumerate(complex_.facets):
        for ridge in _ridges_of(facet):
            ridge_map.setdefault(ridge, []).append(fi)
    bad = tuple(sorted(r for r, fs in ridge_map.items() if len(fs) != 2))
    adj: dict[int, set[int]] = {i: set() for i in range(len(complex_.facets))}
    for fs in ridge_map.values():
        if len(fs) == 2:
            adj[fs[0]].add(fs[1])
            adj[fs[1]].add(fs[0])
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    connected = len(seen) == len(complex_.facets)
    return PseudoManifoldReport(ok=not bad and connected, pure=True, connected=connected, bad_ridges=bad)


@dataclass(frozen=True)
class Orientation:
    """Signs per facet (aligned with complex_.facets) cancelling on ridges."""

    signs: tuple[int, ...]


def orient(complex_: SimplicialComplex):
    """Coherent facet orientation by spanning-tree propagation, or None.

    Raises PreconditionError unless the complex is a pseudo-manifold.
    The incidence sign of a ridge in a facet is (-1)^position on the
    sorted vertex list; coherence means the two incidences cancel.
    """
    pm = is_pseudo_manifold(complex_)
    if not pm:
        raise PreconditionError("orientation needs a pseudo-manifold")
    ridge_map: dict[tuple, list[tuple[int, int]]] = {}
    for fi, facet in enumerate(complex_.facets):
        for pos, ridge in enumerate(_ridges_of(facet)):
            ridge_map.setdefault(ridge, []).append((fi, (-1) ** pos))
    signs = [0] * len(complex_.facets)
    signs[0] = 1
    stack = [0]
    while stack:
        fi = stack.pop()
        for ridge in _ridges_of(complex_.facets[fi]):
            (a, sa), (b, sb) = ridge_map[ridge]
            other, inc_self, inc_other = (b, sa, sb) if a == fi else (a, sb, sa)
            want = -signs[fi] * inc_self * inc_other
            if signs[other] == 0:
                signs[other] = want
                stack.append(other)
            elif signs[other] != want:
                return None
    for pairs in ridge_map.values():
        total = sum(signs[fi] * inc for fi, inc in pairs)
        if total != 0:
            return None
    return Orientation(signs=tuple(signs))


# ---------------------------------------------------------------------------
# group actions


@dataclass(frozen=True)
class PermutationAction:
    """Vertex permutations generating a finite group (closure computed)."""

    n_vertices: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for g in self.generators:
            if sorted(g) != list(range(self.n_vertices)):
                raise ValueError("generator is not a permutation of the vertices")

    def elements(self, cap: int = 10**6):
        """All group elements as permutation tuples (identity included)."""
        ident = tuple(range(self.n_vertices))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for h in self.generators:
                    gh = tuple(h[v] for v in g)
                    if gh not in seen:
                        seen.add(gh)
                        nxt.append(gh)
                        if len(seen) > cap:
                            raise CapExceeded("group closure exceeds cap")
            frontier = nxt
        return sorted(seen)


def cyclic_row_action(rows: int, cols: int, copies: int = 1) -> PermutationAction:
    """Simultaneous row shift on `copies` disjoint rows x cols boards."""
    n = copies * rows * cols
    perm = [0] * n
    for c in range(copies):
        base = c * rows * cols
        for i in range(rows):
            for j in range(cols):
                perm[base + i * cols + j] = base + ((i + 1) % rows) * cols + j
    return PermutationAction(n_vertices=n, generators=(tuple(perm),))


def is_free_action(complex_: SimplicialComplex, action: PermutationAction) -> bool:
    """True iff no nonempty face is fixed setwise by a nontrivial element.

    Raises PreconditionError if some generator fails to map facets to
    facets (i.e. does not act simplicially on the complex).
    """
    if action.n_vertices != complex_.n_vertices:
        raise PreconditionError("action is on a different vertex set")
    facet_set = set(complex_.facets)
    for g in action.generators:
        for f in complex_.facets:
            if tuple(sorted(g[v] for v in f)) not in facet_set:
                raise PreconditionError("generator does not preserve the complex")
    ident = tuple(range(action.n_vertices))
    faces = list(complex_.all_faces())
    for g in action.elements():
        if g == ident:
            continue
        for f in faces:
            if tuple(sorted(g[v] for v in f)) == f:
                return False
    return True


# ---------------------------------------------------------------------------
# the weight map and its degree


@dataclass(frozen=True)
class PLMap:
    """Piecewise-linear map: one rational image point per vertex."""

    complex_: SimplicialComplex
    images: tuple[tuple[Fraction, ...], ...]
    target_dim: int

    def __post_init__(self):
        if len(self.images) != self.complex_.n_vertices:
            raise ValueError("need one image point per vertex")
        if any(len(p) != self.target_dim for p in self.images):
            raise ValueError("image point dimension mismatch")


def test_map_complex(r: int, d: int):
    """(d+1)-fold join of the r x (r-1) chessboard complex, with vertex info.

    Returns (complex, info) where info[v] = (factor, row, col).  Vertex
    ids are factor-major, then row-major.
    """
    if r < 2 or d < 0:
        raise ValueError("need r >= 2 and d >= 0")
    per = r * (r - 1)
    n = (d + 1) * per
    factor_facets = []
    for perm in itertools.permutations(range(r), r - 1):
        factor_facets.append(tuple(sorted(perm[j] * (r - 1) + j for j in range(r - 1))))
    if len(factor_facets) ** (d + 1) > FACET_CAP:
        raise CapExceeded("join facet count exceeds cap")
    facets = []
    for combo in itertools.product(factor_facets, repeat=d + 1):
        facets.append(
            tuple(
                ell * per + v
                for ell, ff in enumerate(combo)
                for v in ff
            )
        )
    info = []
    for ell in range(d + 1):
        for i in range(r):
            for j in range(r - 1):
                info.append((ell, i, j))
    return SimplicialComplex(n, facets), tuple(info)


def _weight_coords(r: int, row: int):
    """Coordinates of the projected basis vector e_row in the sum-zero
    hyperplane of R^r, written in the drop-last-coordinate chart."""
    return [
        Fraction(int(row == c) * r - 1, r) for c in range(r - 1)
    ]


def test_map(r: int, d: int) -> PLMap:
    """The canonical weight map on the (d+1)-fold chessboard join.

    Factor 0 plays the role of the class sent to -(e_1+...+e_d); factor
    ell >= 1 is sent to e_ell.  Block c of the image records the
    projected c-weighted piece masses, so the image lies in a product of
    d+1 sum-zero hyperplanes, dimension (r-1)(d+1).
    """
    complex_, info = test_map_complex(r, d)
    target_dim = (r - 1) * (d + 1)
    images = []
    for ell, i, _j in info:
        base = _weight_coords(r, i)
        fvec = [Fraction(-1)] * d if ell == 0 else [
            Fraction(1 if c == ell - 1 else 0) for c in range(d)
        ]
        point = list(base)
        for c in range(d):
            point.extend(fvec[c] * b for b in base)
        images.append(tuple(point))
    return PLMap(complex_=complex_, images=tuple(images), target_dim=target_dim)


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    modulus: int
    crossings: int
    facets: int
    regular_value_attempts: int

    @property
    def residue(self) -> int:
        return self.degree % self.modulus

    @property
    def residue_is_plus_minus_one(self) -> bool:
        return self.residue in (1 % self.modulus, (-1) % self.modulus)


def _primes_from(start: int):
    n = start
    while True:
        if _is_prime(n):
            yield n
        n += 1


def test_map_degree(r: int, d: int, max_attempts: int = 64, initial_nudges: int = 0) -> DegreeReport:
    """Exact degree of the weight map by signed preimage counting.

    Orients the join (it must be an orientable pseudo-manifold), picks
    the regular value aligned with the projected all-ones direction in
    block 0, and counts facets whose image cone contains it, signed by
    facet orientation times image determinant sign.  Cone membership is
    a rational linear solve; no normalisation onto the sphere is needed.
    If the value turns out non-regular (a zero or dependent solution),
    it is nudged by 1/q along successive axes with q running through
    primes from 1009 upward, and the scan restarts.  `initial_nudges`
    starts that schedule further along, which must not change the
    degree; it exists so the invariance can be exercised directly.
    """
    plm = test_map(r, d)
    complex_ = plm.complex_
    ori = orient(complex_)
    if ori is None:
        raise PreconditionError("weight-map complex is not orientable")
    n = plm.target_dim
    base = [Fraction(1)] * (r - 1) + [Fraction(0)] * ((r - 1) * d)
    nudges: list[int] = []
    prime_iter = _primes_from(1009)
    for t in range(initial_nudges, initial_nudges + max_attempts):
        while len(nudges) < t:
            nudges.append(next(prime_iter))
        # attempt t applies the first t nudges; attempt 0 is the clean value
        value = list(base)
        for idx in range(t):
            value[idx % n] += Fraction(1, nudges[idx])
        total = 0
        crossings = 0
        regular = True
        for fi, facet in enumerate(complex_.facets):
            cols = [plm.images[v] for v in facet]
            matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
            sol = linalg.solve(matrix, value)
            if sol is None:
                continue  # value is outside this image's span entirely
            mu, null = sol
            if null:
                regular = False  # value meets the span of a degenerate image
                break
            if any(v < 0 for v in mu):
                continue  # the ray misses this image cone
            if any(v == 0 for v in mu):
                regular = False  # the ray grazes the image boundary
                break
            s = 1 if linalg.det(matrix) > 0 else -1
            total += ori.signs[fi] * s
            crossings += 1
        if regular:
            return DegreeReport(
                degree=total,
                modulus=r,
                crossings=crossings,
                facets=len(complex_.facets),
                regular_value_attempts=t + 1,
            )
    raise CapExceeded("no regular value found within the perturbation budget")


@dataclass(frozen=True)
class DimsReport:
    """Dimension/rank bookkeeping for a class profile and parameters."""

    join_dim: int
    reduced_join_dim: int
    target_dim: int
    sum_bundle_rank: int
    diagonal_rank: int
    complement_rank: int


def dims_report(profile, r: int, d: int, k: int, cross_check: bool = True) -> DimsReport:
    """Dimensions of the join complexes and bundle ranks for (profile, r, d, k).

    profile lists the class sizes c_0..c_m (each at most r-1).  The join
    over the classes has dimension sum(c_i) - 1; the matched-size join of
    full r x (r-1) boards has dimension (r-1)(m+1) - 1.  Small profiles
    are cross-checked against explicitly constructed complexes.
    """
    profile = tuple(profile)
    if not profile or any(not 0 < c <= r - 1 for c in profile):
        raise ValueError("class sizes must lie in [1, r-1]")
    if not 0 <= k <= d:
        raise ValueError("need 0 <= k <= d")
    m = len(profile) - 1
    s = sum(profile)
    report = DimsReport(
        join_dim=s - 1,
        reduced_join_dim=(r - 1) * (m + 1) - 1,
        target_dim=(r - 1) * (d + 1),
        sum_bundle_rank=r * (d - k),
        diagonal_rank=d - k,
        complement_rank=(r - 1) * (d - k),
    )
    if cross_check and s <= 12:
        k_complex = None
        for c in profile:
            factor = chessboard_complex(r, c)
            k_complex = factor if k_complex is None else join(k_complex, factor)
        assert k_complex.dim == report.join_dim
    return report
