import pytest
from hypothesis import given

from galcremona.arith import RationalFunctionField, make_cyclotomic
from galcremona.cremona import (DegenerateMapError, DeJonquieresMap, Moebius, PlaneMap,
                                binary_gcd, chart_transfer, dejonquieres_lift, dj_compose,
                                dj_inverse, dj_order, dj_power, dj_verify_birational,
                                moebius_order, pullback_divides, rho_restriction_trivial)
from galcremona.mpoly import MPoly
from galcremona.parser import to_mpoly, to_ratfunc

from helpers import moebius_matrices

Q = make_cyclotomic(1)
W = make_cyclotomic(3)
K1 = RationalFunctionField(Q, "t")
K3 = RationalFunctionField(W, "t")
NAMES = ("X", "Y", "Z")


def mob(rows, K):
    return Moebius(*(to_ratfunc(e, K) for row in rows for e in row), K)


def form(text, nf):
    return to_mpoly(text, NAMES, nf)


def test_moebius_is_stored_projectively():
    m = mob([["2*t", "4"], ["0", "2"]], K1)
    assert m == mob([["t", "2"], ["0", "1"]], K1)
    assert str(m) == "[[1, 2/(t)], [0, 1/(t)]]"
    with pytest.raises(DegenerateMapError):
        mob([["t", "t^2"], ["1", "t"]], K1)


def test_moebius_order_three():
    m = mob([["0", "1"], ["-1", "-1"]], K1)
    assert moebius_order(m) == 3
    assert (m ** 3).is_scalar()
    assert m ** -1 == m ** 2


def test_moebius_of_infinite_order():
    assert moebius_order(mob([["1", "1"], ["0", "1"]], K1), bound=20) is None


def test_chart_transfer_conjugates_by_reciprocal():
    m = mob([["z*t", "z - 1"], ["0", "t"]], K3)
    j = mob([["0", "1"], ["1", "0"]], K3)
    assert chart_transfer(m) == j @ m @ j
    u = K3.t + 3
    assert chart_transfer(m)(1 / u) == 1 / m(u)


def test_identity_lifts_to_identity():
    lift = dejonquieres_lift(Moebius.identity(K1))
    assert lift.degree == 1
    assert lift.is_identity()
    assert lift.to_strs(NAMES) == ["X", "Y", "Z"]


def test_lift_of_diagonal_scaling_by_t():
    lift = dejonquieres_lift(mob([["1", "0"], ["0", "t"]], K1))
    assert lift.degree == 2
    assert lift.to_strs(NAMES) == ["X*Y", "Y^2", "X*Z"]
    assert lift.check_invariants()


def test_lift_of_constant_diagonal_is_linear():
    lift = dejonquieres_lift(mob([["z", "0"], ["0", "1"]], K3))
    assert lift.degree == 1
    assert lift.same_as(PlaneMap.from_matrix([[W.one, W.zero, W.zero],
                                              [W.zero, W.one, W.zero],
                                              [W.zero, W.zero, W.zeta]], W))
    assert dj_order(lift) == 3


def test_lift_round_trips_through_moebius():
    m = mob([["z*t", "z - 1"], ["0", "t"]], K3)
    lift = dejonquieres_lift(m)
    assert lift.moebius(K3) == m
    assert lift.degree == 2
    assert dj_order(lift) == 3
    assert dj_verify_birational(lift)
    assert rho_restriction_trivial(lift)


def test_compose_with_inverse_is_identity():
    m = mob([["t^2 + 1", "t"], ["1", "t - 2"]], K1)
    lift = dejonquieres_lift(m)
    assert dj_compose(dj_inverse(lift), lift).is_identity()
    assert dj_power(lift, 1).same_as(lift)
    with pytest.raises(ValueError):
        dj_power(lift, 0)


def test_from_components_strips_common_binary_factor():
    lift = dejonquieres_lift(mob([["1", "0"], ["0", "t"]], K1))
    x0, x1, _ = MPoly.gens(3, Q)
    scaled = DeJonquieresMap.from_components([c * (x0 + x1) for c in lift.components])
    assert scaled.same_as(lift)
    assert scaled.degree == 2


def test_from_components_rejects_maps_moving_the_pencil():
    x0, x1, x2 = MPoly.gens(3, Q)
    with pytest.raises(DegenerateMapError):
        DeJonquieresMap.from_components([x1, x0, x2])


def test_binary_gcd():
    x0, x1, _ = MPoly.gens(3, Q)
    g = binary_gcd([x0 * x1 * (x0 + x1), x0 * (x0 + x1) ** 2])
    assert g == x0 * (x0 + x1)


def test_pullback_divides_and_quotient():
    phi = form("X^4 - Y^3*Z", W)
    fmap = PlaneMap.from_matrix([[W.zeta, W.zero, W.zero], [W.zero, W.one, W.zero],
                                 [W.zero, W.zero, W.zeta]], W)
    ok, quotient = pullback_divides(fmap, phi)
    assert ok and quotient == MPoly.constant(W.zeta, 3, W)
    swap = PlaneMap.from_matrix([[Q.zero, Q.one, Q.zero], [Q.one, Q.zero, Q.zero],
                                 [Q.zero, Q.zero, Q.one]], Q)
    assert pullback_divides(swap, form("X^4 - Y^3*Z", Q)) == (False, None)
    assert not rho_restriction_trivial(swap)


def test_plane_map_validation():
    x0, x1, x2 = MPoly.gens(3, Q)
    with pytest.raises(ValueError):
        PlaneMap([x0, x1 * x1, x2])
    with pytest.raises(DegenerateMapError):
        PlaneMap([x0 * 0, x1 * 0, x2 * 0])


# -- properties -------------------------------------------------------------

@given(moebius_matrices(K1), moebius_matrices(K1), moebius_matrices(K1))
def test_moebius_group_axioms(a, b, c):
    e = Moebius.identity(K1)
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ e == a == e @ a
    assert a @ a.inverse() == e
    assert (a @ b).inverse() == b.inverse() @ a.inverse()


@given(moebius_matrices(K1), moebius_matrices(K1))
def test_lift_is_a_homomorphism(m, n):
    lm, ln = dejonquieres_lift(m), dejonquieres_lift(n)
    composed = dj_compose(lm, ln)
    assert composed.same_as(dejonquieres_lift(m @ n))
    assert composed.check_invariants()
