"""Property-based invariants for the exact-arithmetic core."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from tverlab import serialize, svg
from tverlab.geometry import lp_feasible_common_point, lp_solve_eq
from tverlab.solver import KPlane

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
coords = st.integers(min_value=-9, max_value=9)


@given(st.fractions(max_denominator=10**9))
def test_rational_serialization_round_trips(x):
    assert serialize.parse_rational(serialize.fraction_to_json(x)) == x


@given(
    st.integers(1, 4),
    st.integers(1, 5),
    st.data(),
)
def test_lp_finds_planted_solutions(nrows, ncols, data):
    rows = [
        [data.draw(rationals) for _ in range(ncols)] for _ in range(nrows)
    ]
    planted = [Fraction(data.draw(st.integers(0, 6))) for _ in range(ncols)]
    rhs = [sum(a * v for a, v in zip(row, planted)) for row in rows]
    x, gap = lp_solve_eq(rows, rhs)
    assert gap == 0
    assert all(v >= 0 for v in x)
    for row, b in zip(rows, rhs):
        assert sum(a * v for a, v in zip(row, x)) == b


@given(st.lists(st.tuples(coords, coords), min_size=1, max_size=8))
def test_hull_contains_inputs_and_is_order_independent(points):
    hull = svg.convex_hull(points)
    assert set(hull) <= {(Fraction(a), Fraction(b)) for a, b in points}
    assert svg.convex_hull(list(reversed(points))) == hull
    # every input point lies weakly inside each hull edge
    n = len(hull)
    if n >= 3:
        for p in points:
            for i in range(n):
                assert svg._cross(hull[i], hull[(i + 1) % n], p) >= 0


@given(
    st.lists(
        st.lists(st.tuples(coords, coords), min_size=1, max_size=3),
        min_size=1,
        max_size=3,
    ),
    st.tuples(coords, coords),
)
def test_common_point_feasibility_is_translation_invariant(pieces, shift):
    moved = [[(p[0] + shift[0], p[1] + shift[1]) for p in piece] for piece in pieces]
    got = lp_feasible_common_point(pieces)
    got_moved = lp_feasible_common_point(moved)
    assert (got is None) == (got_moved is None)
    if got is not None:
        expected = tuple(c + s for c, s in zip(got.point, shift))
        # witnesses may differ, but the translated witness must still work
        assert got_moved.point is not None
        moved_hulls_feasible = lp_feasible_common_point(
            [[expected]] + [list(piece) for piece in moved]
        )
        assert moved_hulls_feasible is not None


@given(
    st.tuples(rationals, rationals, rationals),
    st.tuples(rationals, rationals),
)
def test_plane_contains_its_own_combinations(base, ts):
    directions = ((Fraction(1), Fraction(0), Fraction(2)), (Fraction(0), Fraction(1), Fraction(-1)))
    plane = KPlane(base=base, directions=directions)
    point = tuple(
        b + ts[0] * u + ts[1] * v for b, u, v in zip(base, *directions)
    )
    assert plane.contains(point)
    off = (point[0], point[1], point[2] + Fraction(1, 3))
    assert not plane.contains(off)


@given(st.integers(0, 10**6), st.sampled_from((2, 3, 5, 7)))
def test_halton_values_lie_in_unit_interval(index, base):
    from tverlab.solver import _halton

    value = _halton(index, base)
    assert 0 <= value < 1
    assert _halton(index, base) == value
