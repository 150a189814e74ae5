from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from charvar import fforacle as ff
from charvar import genus_pipelines as gp
from charvar import strata_catalog as cat
from charvar.polyq import evaluate


def _sl2_brute(p):
    return [m for m in product(range(p), repeat=4) if (m[0] * m[3] - m[1] * m[2]) % p == 1]


def _mulm(x, y, p):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)


def _invm(x, p):
    a, b, c, d = x
    return (d, -b % p, -c % p, a)


def _character_degrees(p):
    """Irreducible character degrees of SL2(F_p), p odd."""
    return ([1, p] + [p + 1] * ((p - 3) // 2) + [p - 1] * ((p - 1) // 2)
            + [(p + 1) // 2] * 2 + [(p - 1) // 2] * 2)


@pytest.mark.parametrize("p", [3, 5])
def test_commutator_distribution_matches_brute_force(p):
    G = ff.enumerate_group(p)
    els = _sl2_brute(p)
    counts = {}
    for a in els:
        ai = _invm(a, p)
        for b in els:
            z = _mulm(_mulm(a, b, p), _mulm(ai, _invm(b, p), p), p)
            counts[z] = counts.get(z, 0) + 1
    dist = ff.oracle(p)
    assert dist.total == len(els) ** 2
    for m in els:
        assert dist[m] == counts.get(m, 0)
    assert G.order == len(els)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_character_degrees_are_consistent(p):
    degs = _character_degrees(p)
    assert sum(d * d for d in degs) == p**3 - p
    assert len(degs) == p + 4


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_commuting_pairs_count_classes(p):
    order = p**3 - p
    assert ff.count_genus1_fiber(p, "id") == order * (p + 4)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_genus2_identity_count_by_frobenius_formula(p):
    order = p**3 - p
    expected = order**3 * sum(Fraction(1, d * d) for d in _character_degrees(p))
    assert expected.denominator == 1
    assert ff.count_genus2_fiber(p, "id") == expected


def test_genus2_identity_count_at_three():
    # Differs from the printed 57216; agrees with the character formula.
    assert ff.count_genus2_fiber(3, "id") == 53376


@pytest.mark.parametrize("p", [5, 7, 11])
def test_conjugacy_class_count(p):
    labels = ff.conjugacy_classes(p)
    assert len(np.unique(labels)) == p + 4


@pytest.mark.parametrize("p", [5, 7])
def test_distribution_is_class_function(p):
    assert ff.oracle(p).is_class_function(samples=200, seed=1)


def test_parallel_equals_serial():
    serial = ff.commutator_distribution(7, workers=1)
    split = ff.commutator_distribution(7, workers=1, chunks=5)
    para = ff.commutator_distribution(7, workers=2, chunks=4)
    assert np.array_equal(serial.counts, split.counts)
    assert np.array_equal(serial.counts, para.counts)


def test_group_arrays_are_read_only():
    G = ff.enumerate_group(5)
    with pytest.raises(ValueError):
        G.elements[0, 0] = 3


def test_index_rejects_non_members():
    with pytest.raises(ValueError):
        ff.enumerate_group(5).index((1, 1, 1, 1))


@pytest.mark.parametrize("bad", [2, 4, 9, 1, 0])
def test_invalid_primes(bad):
    with pytest.raises(ff.InvalidPrime):
        ff.PrimeField(bad)


def test_prime_bound():
    with pytest.raises(ff.PrimeTooLarge):
        ff.enumerate_group(37)
    with pytest.raises(ff.PrimeTooLarge):
        ff.count_genus1_fiber(37, "id")


def test_lambda_validation():
    assert ff.PrimeField(3).valid_lambdas() == []
    with pytest.raises(ff.InvalidLambda):
        ff.holonomy_matrix(5, "diag", 4)
    with pytest.raises(ff.InvalidLambda):
        ff.holonomy_matrix(5, "diag")
    with pytest.raises(ff.InvalidLambda):
        ff.verify_space("X4bar_lambda", [3])
    assert ff.holonomy_matrix(7, "diag", 3) == (3, 0, 0, 5)


def test_field_helpers():
    f = ff.PrimeField(7)
    assert f.inv(3) == 5
    assert f.smallest_nonresidue == 3
    assert f.is_square(2) and not f.is_square(3)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


# ------------------------------------------------------------- genus 1 fibers

@pytest.mark.parametrize("space", ["X0", "X1", "X2bar"])
@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_genus1_fibers_polynomial_at_every_prime(space, p):
    rep = ff.verify_space(space, [p])
    assert rep.rows[0].match


@pytest.mark.parametrize("p", [5, 13, 17])
def test_jminus_fiber_matches_when_minus_one_is_square(p):
    assert ff.verify_space("X3bar", [p]).all_match


@pytest.mark.parametrize("p", [3, 7, 11])
def test_jminus_fiber_misses_when_minus_one_is_not_square(p):
    rep = ff.verify_space("X3bar", [p])
    assert not rep.rows[0].match
    if p == 3:
        assert rep.rows[0].observed == 0


@pytest.mark.parametrize("p", [7, 11, 13])
def test_diag_fiber_matches_for_square_eigenvalues(p):
    f = ff.PrimeField(p)
    lams = [x for x in f.valid_lambdas() if f.is_square(x)]
    assert lams
    rep = ff.verify_space("X4bar_lambda", [p], lambdas=lams)
    assert rep.all_match


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_diag_fiber_misses_for_non_square_eigenvalues(p):
    f = ff.PrimeField(p)
    lams = [x for x in f.valid_lambdas() if not f.is_square(x)]
    rep = ff.verify_space("X4bar_lambda", [p], lambdas=lams)
    assert not any(r.match for r in rep.rows)
    assert rep.lambda_independent[p]


def test_diag_counts_depend_on_lambda_report_is_honest():
    rep = ff.verify_space("X4bar_lambda", [7])
    assert rep.lambda_independent == {7: False}
    f = ff.PrimeField(7)
    assert [r.match for r in rep.rows] == [f.is_square(r.lam) for r in rep.rows]
    assert not rep.all_match
    assert ff.verify_space("X4bar_lambda", [5]).rows[0].observed == 64


# ------------------------------------------------------------- genus 2 fibers

def test_identity_fiber_interpolates_to_component_sum():
    primes = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    rep = ff.verify_space("Y", primes)
    assert rep.all_match
    assert rep.interpolation.coefficients == gp.genus2_Y().epoly.coeffs
    assert rep.expected_poly != gp.STATED_Y


def test_identity_fiber_never_matches_printed_value():
    rep = ff.verify_space("Y", [3, 5, 7], expected=gp.STATED_Y)
    assert not any(r.match for r in rep.rows)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_jplus_fiber_at_every_prime(p):
    assert ff.verify_space("Z_Jplus", [p]).all_match


@pytest.mark.parametrize("p", [5, 13])
def test_jminus_total_matches_when_minus_one_is_square(p):
    assert ff.verify_space("Z_Jminus", [p]).all_match


@pytest.mark.parametrize("p", [3, 7])
def test_jminus_total_misses_otherwise(p):
    assert not ff.verify_space("Z_Jminus", [p]).all_match


def test_minus_identity_total_observed_pattern():
    assert ff.verify_space("W", [5]).all_match
    for p in (3, 7, 11):
        assert not ff.verify_space("W", [p]).all_match


@pytest.mark.parametrize("p", [7, 11])
def test_diag_total_matches_for_square_eigenvalues(p):
    f = ff.PrimeField(p)
    lams = [x for x in f.valid_lambdas() if f.is_square(x)]
    assert ff.verify_space("Z_diag", [p], lambdas=lams).all_match


def test_genus2_counts_agree_with_convolution_brute_force():
    p = 5
    G = ff.enumerate_group(p)
    c = ff.oracle(p)
    xi = G.index((p - 1, 0, 0, p - 1))
    total = 0
    for z in range(G.order):
        w = G.index(_mulm(_invm(tuple(G.elements[z]), p), (p - 1, 0, 0, p - 1), p))
        total += c[z] * c[w]
    assert ff.count_genus2_fiber(p, "-id") == total == c.convolve_at(xi)


# ------------------------------------------------------------- irreducibles

def _f9_brute_irreducible_count():
    """Pure-Python count at p = 3 with F_9 = F_3[i], i^2 = -1."""
    p = 3

    def fmul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def fadd(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    field = [(a, b) for a in range(p) for b in range(p)]
    zero, one = (0, 0), (1, 0)
    lines = [(one, x) for x in field] + [(zero, one)]

    def emb(n):
        return (n % p, 0)

    def eigenlines(m):
        a, b, c, d = (emb(v) for v in m)
        out = set()
        for k, (v0, v1) in enumerate(lines):
            w0 = fadd(fmul(a, v0), fmul(b, v1))
            w1 = fadd(fmul(c, v0), fmul(d, v1))
            cross = fadd(fmul(w0, v1), fmul((-w1[0] % p, -w1[1] % p), v0))
            if cross == zero:
                out.add(k)
        return frozenset(out)

    els = _sl2_brute(p)
    eig = {m: eigenlines(m) for m in els}
    pairs = [eig[a] & eig[b] for a in els for b in els if _mulm(a, b, p) == _mulm(b, a, p)]
    total = sum(1 for s in pairs for t in pairs if not (s & t))
    return total


def test_irreducible_count_matches_pure_python_at_three():
    raw = _f9_brute_irreducible_count()
    assert raw == ff.count_irreducible_commuting_quadruples(3, quotient=False)
    assert raw // 24 == 932


@pytest.mark.parametrize("p", [3, 5, 7])
def test_irreducible_count_matches_component_polynomial(p):
    i_poly = gp.genus2_M_Id().intermediates["I"]
    assert ff.count_irreducible_commuting_quadruples(p) == evaluate(i_poly, p)


def test_irreducible_count_raw_is_divisible():
    raw = ff.count_irreducible_commuting_quadruples(5, quotient=False)
    assert raw % 120 == 0


def test_unknown_space():
    with pytest.raises(cat.UnknownSpace):
        ff.verify_space("nope", [3])


def test_report_serialization():
    d = ff.verify_space("X0", [3, 5]).to_dict()
    assert d["all_match"] and d["rows"][0]["prime"] == 3


def test_identity_adjudication_prefers_component_sum():
    adj = ff.adjudicate_identity((3, 5))
    assert adj.counts == (932, 8364)
    assert adj.supports == "component_sum"
    assert adj.supported_value == gp.genus2_M_Id().epoly
    assert adj.theorem_irreducible != adj.counts
    assert adj.to_dict()["supports"] == "component_sum"
