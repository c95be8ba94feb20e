"""Tests for chessboard complexes, homology, orientation, and the map degree."""
import math

import pytest
import sympy
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from tverlab import topology as tp
from tverlab.errors import CapExceeded, PreconditionError

# ---------------------------------------------------------------------------
# fixtures


def mobius_band():
    """Five-triangle band with a half twist; its boundary is a pentagon."""
    return tp.SimplicialComplex(
        5, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)]
    )


def projective_plane():
    """The 6-vertex triangulation of the projective plane (10 triangles)."""
    return tp.SimplicialComplex(
        6,
        [
            (0, 1, 2), (0, 2, 4), (0, 3, 4), (0, 1, 5), (0, 3, 5),
            (1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5), (2, 4, 5),
        ],
    )


def betti_via_sympy(complex_, p):
    """Independent Betti computation: sympy rref ranks over GF(p)."""
    counts = complex_.f_vector()
    ranks = [0] * (complex_.dim + 2)
    for d in range(1, complex_.dim + 1):
        mat = tp.boundary_matrix(complex_, d)
        dm = DomainMatrix.from_list(
            [[sympy.Integer(x) for x in row] for row in mat], GF(p)
        )
        _, pivots = dm.rref()
        ranks[d] = len(pivots)
    return tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(complex_.dim + 1))


# ---------------------------------------------------------------------------
# complex construction


def test_facets_canonicalized_and_sorted():
    c = tp.SimplicialComplex(4, [(2, 1), (3, 0), (1, 2)])
    assert c.facets == ((0, 3), (1, 2))
    assert c.dim == 1


def test_non_maximal_facet_rejected():
    with pytest.raises(ValueError, match="maximal"):
        tp.SimplicialComplex(3, [(0, 1, 2), (0, 1)])


def test_bad_facets_rejected():
    with pytest.raises(ValueError):
        tp.SimplicialComplex(2, [(0, 2)])
    with pytest.raises(ValueError):
        tp.SimplicialComplex(3, [(1, 1, 2)])
    with pytest.raises(ValueError):
        tp.SimplicialComplex(3, [])


def test_chessboard_f_vectors():
    cases = {
        (2, 1): (2,),
        (2, 2): (4, 2),
        (3, 2): (6, 6),
        (4, 3): (12, 36, 24),
        (5, 4): (20, 120, 240, 120),
    }
    for (r, n), fv in cases.items():
        c = tp.chessboard_complex(r, n)
        assert c.f_vector() == fv, (r, n)
        assert c.is_pure()


def test_chessboard_transpose_symmetry():
    a = tp.chessboard_complex(3, 2)
    b = tp.chessboard_complex(2, 3)
    assert a.f_vector() == b.f_vector()


def test_chessboard_bad_args():
    with pytest.raises(ValueError):
        tp.chessboard_complex(0, 2)


def test_join_of_point_pairs_is_square():
    s0 = tp.chessboard_complex(2, 1)
    sq = tp.join(s0, s0)
    assert sq.f_vector() == (4, 4)
    assert tp.homology_mod_p(sq, 2) == (1, 1)


# ---------------------------------------------------------------------------
# homology


def test_betti_goldens():
    assert tp.homology_mod_p(tp.chessboard_complex(2, 1), 2) == (2,)
    assert tp.homology_mod_p(tp.chessboard_complex(2, 2), 2) == (2, 0)
    for p in (2, 3):
        assert tp.homology_mod_p(tp.chessboard_complex(3, 2), p) == (1, 1)
        assert tp.homology_mod_p(tp.chessboard_complex(4, 3), p) == (1, 2, 1)


@pytest.mark.parametrize("r,n", [(2, 1), (2, 2), (3, 2), (4, 3)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_homology_matches_sympy(r, n, p):
    c = tp.chessboard_complex(r, n)
    assert tp.homology_mod_p(c, p) == betti_via_sympy(c, p)


def test_homology_matches_sympy_on_projective_plane():
    c = projective_plane()
    for p in (2, 3):
        assert tp.homology_mod_p(c, p) == betti_via_sympy(c, p)
    assert tp.homology_mod_p(c, 2) == (1, 1, 1)
    assert tp.homology_mod_p(c, 3) == (1, 0, 0)


def test_euler_characteristic_consistency():
    for c in (
        tp.chessboard_complex(3, 2),
        tp.chessboard_complex(4, 3),
        projective_plane(),
        mobius_band(),
    ):
        for p in (2, 3):
            betti = tp.homology_mod_p(c, p)
            assert sum((-1) ** i * b for i, b in enumerate(betti)) == c.euler_characteristic()


def test_suspension_shifts_betti():
    hexagon = tp.chessboard_complex(3, 2)
    susp = tp.join(hexagon, tp.chessboard_complex(2, 1))
    for p in (2, 3):
        assert tp.homology_mod_p(susp, p) == (1, 0, 1)


def test_homology_requires_prime():
    with pytest.raises(ValueError, match="prime"):
        tp.homology_mod_p(tp.chessboard_complex(3, 2), 4)


def test_chain_complex_boundary_squares_to_zero():
    cc = tp.chain_complex_mod_p(tp.chessboard_complex(4, 3), 3)
    assert cc.face_counts == (12, 36, 24)
    with pytest.raises(ValueError, match="prime"):
        tp.chain_complex_mod_p(tp.chessboard_complex(3, 2), 6)


# ---------------------------------------------------------------------------
# pseudo-manifolds and orientation


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_square_minus_column_boards_are_orientable_pseudo_manifolds(r):
    c = tp.chessboard_complex(r, r - 1)
    report = tp.is_pseudo_manifold(c)
    assert report.ok and report.pure and report.connected
    ori = tp.orient(c)
    assert ori is not None
    assert len(ori.signs) == len(c.facets)
    assert set(ori.signs) <= {1, -1}


def test_band_with_twist_has_boundary_ridges():
    report = tp.is_pseudo_manifold(mobius_band())
    assert not report.ok
    assert report.pure and report.connected
    assert len(report.bad_ridges) == 5  # its boundary circle is a pentagon
    with pytest.raises(PreconditionError):
        tp.orient(mobius_band())


def test_projective_plane_is_non_orientable():
    c = projective_plane()
    assert tp.is_pseudo_manifold(c).ok
    assert tp.orient(c) is None


def test_impure_complex_is_not_pseudo_manifold():
    c = tp.SimplicialComplex(4, [(0, 1, 2), (2, 3)])
    report = tp.is_pseudo_manifold(c)
    assert not report.ok and not report.pure


def test_disconnected_pair_of_edges():
    c = tp.chessboard_complex(2, 2)  # two disjoint segments
    report = tp.is_pseudo_manifold(c)
    assert not report.ok
    assert report.bad_ridges  # free endpoints


def test_orientation_signs_cancel_on_ridges():
    c = tp.chessboard_complex(3, 2)
    ori = tp.orient(c)
    incidence = {}
    for fi, facet in enumerate(c.facets):
        for pos in range(len(facet)):
            ridge = facet[:pos] + facet[pos + 1 :]
            incidence.setdefault(ridge, []).append(ori.signs[fi] * (-1) ** pos)
    assert all(sum(v) == 0 for v in incidence.values())


# ---------------------------------------------------------------------------
# group actions


def test_cyclic_row_action_closure():
    act = tp.cyclic_row_action(3, 2)
    assert len(act.elements()) == 3


def test_row_shift_acts_freely_on_boards():
    assert tp.is_free_action(tp.chessboard_complex(3, 2), tp.cyclic_row_action(3, 2))
    assert tp.is_free_action(tp.chessboard_complex(2, 2), tp.cyclic_row_action(2, 2))


def test_row_shift_acts_freely_on_join():
    km, _info = tp.test_map_complex(3, 1)
    assert tp.is_free_action(km, tp.cyclic_row_action(3, 2, copies=2))


def test_fixed_face_means_not_free():
    c = tp.SimplicialComplex(2, [(0, 1)])
    swap = tp.PermutationAction(2, ((1, 0),))
    assert not tp.is_free_action(c, swap)


def test_action_must_preserve_complex():
    c = tp.chessboard_complex(2, 2)  # edges (0,3) and (1,2)
    bad = tp.PermutationAction(4, ((1, 0, 2, 3),))
    with pytest.raises(PreconditionError, match="preserve"):
        tp.is_free_action(c, bad)
    with pytest.raises(PreconditionError):
        tp.is_free_action(c, tp.cyclic_row_action(3, 2))


def test_non_permutation_generator_rejected():
    with pytest.raises(ValueError):
        tp.PermutationAction(3, ((0, 0, 2),))


# ---------------------------------------------------------------------------
# the weight map and its degree


def test_map_complex_shape():
    km, info = tp.test_map_complex(3, 1)
    assert km.n_vertices == 12
    assert len(km.facets) == 36
    assert km.dim == 3
    assert info[0] == (0, 0, 0) and info[-1] == (1, 2, 1)
    assert tp.is_pseudo_manifold(km).ok


def test_map_images_have_zero_row_sums():
    plm = tp.test_map(3, 1)
    assert plm.target_dim == 4
    # the three distinct row images within a factor sum to zero blockwise
    row_imgs = [plm.images[i * 2] for i in range(3)]
    for coord in range(4):
        assert sum(p[coord] for p in row_imgs) == 0


@pytest.mark.parametrize(
    "r,d",
    [(2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2)],
)
def test_degree_values(r, d):
    rep = tp.test_map_degree(r, d)
    expected = math.factorial(r - 1) ** (d + 1)
    assert abs(rep.degree) == expected
    assert rep.modulus == r
    assert rep.residue_is_plus_minus_one
    # the clean value is regular and meets exactly the expected sheets
    assert rep.regular_value_attempts == 1
    assert rep.crossings == expected


def test_degree_invariant_under_value_perturbation():
    for (r, d) in [(2, 1), (3, 0), (3, 1)]:
        clean = tp.test_map_degree(r, d)
        nudged = tp.test_map_degree(r, d, initial_nudges=3)
        assert nudged.degree == clean.degree
        assert nudged.regular_value_attempts >= 4


def test_degree_deterministic():
    assert tp.test_map_degree(3, 1) == tp.test_map_degree(3, 1)


def test_degree_bad_args():
    with pytest.raises(ValueError):
        tp.test_map_complex(1, 2)
    with pytest.raises(ValueError):
        tp.test_map_complex(3, -1)


def test_plmap_validation():
    plm = tp.test_map(2, 1)
    with pytest.raises(ValueError):
        tp.PLMap(plm.complex_, plm.images[:-1], plm.target_dim)
    with pytest.raises(ValueError):
        tp.PLMap(plm.complex_, tuple(p[:-1] for p in plm.images), plm.target_dim)


# ---------------------------------------------------------------------------
# dimension bookkeeping


def test_dims_report_extremal_profile():
    rep = tp.dims_report([2, 2, 2, 1], 3, 2, 0)
    assert rep.join_dim == 6
    assert rep.reduced_join_dim == 7
    assert rep.target_dim == 6
    assert rep.sum_bundle_rank == 6
    assert rep.diagonal_rank == 2
    assert rep.complement_rank == 4


def test_dims_report_transversal_case():
    rep = tp.dims_report([1, 1, 1], 2, 2, 1)
    assert rep.join_dim == 2
    assert rep.sum_bundle_rank == 2
    assert rep.diagonal_rank == 1
    assert rep.complement_rank == 1


def test_dims_report_rejects_oversized_class():
    with pytest.raises(ValueError):
        tp.dims_report([3, 1], 3, 2, 0)
    with pytest.raises(ValueError):
        tp.dims_report([], 3, 2, 0)
    with pytest.raises(ValueError):
        tp.dims_report([1, 1], 2, 1, 2)


def test_caps_are_enforced(monkeypatch):
    monkeypatch.setattr(tp, "FACET_CAP", 10)
    with pytest.raises(CapExceeded):
        tp.chessboard_complex(5, 4)
    with pytest.raises(CapExceeded):
        tp.test_map_complex(3, 2)
