import pytest
from hypothesis import given, settings, strategies as st

from charvar.hodge_rep import (
    EquivPair,
    N2,
    RepZ2,
    RepZ2xZ2,
    T2,
    conjugation_closure_e,
    fiber_e,
    parse_rep,
    pullback_tau,
    quotient_fibration_e,
    quotient_fibration_pair,
    restrict_to_z2,
    tensor_z2,
    tensor_z2z2,
    total_e_punctured_line,
    total_e_z2z2,
)
from charvar.polyq import EPoly, Q, ZERO, parse

P = parse
CSTAR = EquivPair(Q, EPoly([-1]))
R_X4BAR = RepZ2(P("q^3 - 1"), P("3q^2 - 3q"))
R_X4BAR_Z2 = RepZ2xZ2(P("q^3"), P("-3q"), P("3q^2"), P("-1"))


def test_quotient_of_torus_square():
    # (C* x C*)/Z2 with the inversion action on both factors.
    assert quotient_fibration_e(CSTAR, CSTAR) == P("q^2 + 1")
    pair = quotient_fibration_pair(CSTAR, CSTAR)
    assert pair == EquivPair(P("q^2 + 1"), P("-2q"))
    assert pair.total == (Q - 1) ** 2


def test_trivial_pair():
    assert EquivPair.trivial(P("q^3 - q")) == EquivPair(P("q^3 - q"), ZERO)


def test_z2_tensor_table():
    assert tensor_z2(N2, N2) == T2
    assert tensor_z2(T2, N2) == N2
    r = RepZ2(Q, 2 * Q)
    assert tensor_z2(r, T2) == r


def test_klein_tensor_table():
    basis = [RepZ2xZ2(*(EPoly([1]) if j == i else ZERO for j in range(4))) for i in range(4)]
    t, s2, sm2, s0 = basis
    assert tensor_z2z2(s2, s2) == t
    assert tensor_z2z2(s2, sm2) == s0
    assert tensor_z2z2(sm2, s0) == s2
    assert tensor_z2z2(s0, s0) == t


def test_square_of_x4bar_mod_z2_monodromy():
    sq = tensor_z2z2(R_X4BAR_Z2, R_X4BAR_Z2)
    assert sq == RepZ2xZ2(P("q^6 + 9q^4 + 9q^2 + 1"), P("-6q^4 - 6q^2"),
                          P("6q^5 + 6q"), P("-20q^3"))
    assert fiber_e(sq) == fiber_e(R_X4BAR_Z2) ** 2


def test_square_closure_and_invariant_total():
    sq = R_X4BAR_Z2 * R_X4BAR_Z2
    assert conjugation_closure_e(sq) == P(
        "q^9 - 2q^8 + 2q^7 - 18q^6 + 6q^5 + 28q^4 - 8q^3 - 8q^2 - q")
    assert total_e_z2z2(sq).plus == P(
        "q^7 - 2q^6 + 3q^5 - 12q^4 + 29q^3 - 12q^2 - 5q - 2")


def test_tau_and_restriction():
    r = R_X4BAR_Z2
    assert pullback_tau(r) == RepZ2xZ2(P("q^3"), P("3q^2"), P("-3q"), P("-1"))
    assert restrict_to_z2(r) == R_X4BAR


def test_punctured_line_totals():
    assert total_e_punctured_line(R_X4BAR, 3) == P("q^4 - 3q^3 - 6q^2 + 5q + 3")
    assert total_e_punctured_line(T2, 1) == Q - 1
    with pytest.raises(ValueError):
        total_e_punctured_line(T2, 0)


def test_klein_totals_of_x4bar():
    tot = total_e_z2z2(R_X4BAR_Z2)
    assert tot.total == P("q^4 - 3q^3 - 6q^2 + 5q + 3")
    assert tot.plus == P("q^4 - 2q^3 - 3q^2 + 3q + 1")
    assert tot.minus == P("-q^3 - 3q^2 + 2q + 2")
    assert conjugation_closure_e(R_X4BAR_Z2) == P("q^6 - 2q^5 - 4q^4 + 3q^2 + 2q")


def test_render_and_parse():
    text = "(q^3)T + (-3q)S₂ + (3q^2)S₋₂ + (-1)S₀"
    assert str(R_X4BAR_Z2) == text
    assert parse_rep(text) == R_X4BAR_Z2
    assert parse_rep("(q^3)T + (-3q)S2 + (3q^2)S-2 + (-1)S0") == R_X4BAR_Z2
    assert str(R_X4BAR) == "(q^3 - 1)T + (3q^2 - 3q)N"
    assert parse_rep(str(R_X4BAR)) == R_X4BAR
    assert str(RepZ2(ZERO, ZERO)) == "0"
    assert parse_rep("(q)T", ring=RepZ2xZ2) == RepZ2xZ2(Q, ZERO, ZERO, ZERO)


def test_parse_rep_errors():
    with pytest.raises(ValueError):
        parse_rep("(q)T + (1)N + (2)S0")
    with pytest.raises(ValueError):
        parse_rep("(q)N", ring=RepZ2xZ2)
    with pytest.raises(ValueError):
        parse_rep("q T")


def test_scalar_multiplication():
    assert (Q - 1) * T2 == RepZ2(Q - 1, ZERO)
    assert R_X4BAR * 2 == R_X4BAR + R_X4BAR
    assert -R_X4BAR + R_X4BAR == RepZ2(ZERO, ZERO)


polys = st.lists(st.integers(-1000, 1000), max_size=6).map(EPoly)
klein = st.builds(RepZ2xZ2, polys, polys, polys, polys)
z2 = st.builds(RepZ2, polys, polys)


@settings(max_examples=150)
@given(klein, klein)
def test_restriction_is_ring_map(a, b):
    assert restrict_to_z2(a * b) == restrict_to_z2(a) * restrict_to_z2(b)
    assert restrict_to_z2(a + b) == restrict_to_z2(a) + restrict_to_z2(b)


@settings(max_examples=150)
@given(klein, klein)
def test_tau_is_involutive_ring_automorphism(a, b):
    assert pullback_tau(pullback_tau(a)) == a
    assert pullback_tau(a * b) == pullback_tau(a) * pullback_tau(b)


@settings(max_examples=150)
@given(klein, klein, z2, z2)
def test_fiber_e_is_multiplicative(a, b, c, d):
    assert fiber_e(a * b) == fiber_e(a) * fiber_e(b)
    assert fiber_e(c * d) == fiber_e(c) * fiber_e(d)


@settings(max_examples=150)
@given(klein)
def test_klein_totals_are_consistent(r):
    tot = total_e_z2z2(r)
    assert tot.total == tot.plus + tot.minus
    assert tot.total == total_e_punctured_line(restrict_to_z2(r), 3)
    assert conjugation_closure_e(r) == (Q * Q - Q) * tot.plus + Q * tot.total


@settings(max_examples=150)
@given(klein)
def test_tau_preserves_totals(r):
    assert total_e_z2z2(pullback_tau(r)) == total_e_z2z2(r)


@settings(max_examples=150)
@given(klein, z2)
def test_parse_rep_round_trip(r, s):
    assert parse_rep(str(r), ring=RepZ2xZ2) == r
    assert parse_rep(str(s), ring=RepZ2) == s


@settings(max_examples=150)
@given(polys, polys, polys, polys)
def test_quotient_pair_sums_to_product(a, b, c, d):
    f, g = EquivPair(a, b), EquivPair(c, d)
    assert quotient_fibration_pair(f, g).total == f.total * g.total
