import pytest
from hypothesis import given, settings, strategies as st

from dominotab.partitions import partitions_up_to, up_cell_count
from dominotab.polyring import Polynomial, domino_genfun, genfun, poly_mul
from dominotab.tableaux import PLAIN, SET_VALUED, SHIFTED, SHIFTED_SET_VALUED


def P(n, *terms):
    return Polynomial(n, {tuple(m): c for m, c in terms})


def test_mul_basic():
    x1 = P(2, ((1, 0), 1))
    x2 = P(2, ((0, 1), 1))
    assert poly_mul(x1, x2) == P(2, ((1, 1), 1))
    s = x1 + x2
    assert s * s == P(2, ((2, 0), 1), ((1, 1), 2), ((0, 2), 1))


def test_mul_requires_matching_vars():
    with pytest.raises(ValueError):
        poly_mul(P(2, ((1, 0), 1)), P(3, ((1, 0, 0), 1)))


def test_zero_coefficients_dropped():
    p = P(1, ((1,), 1)) - P(1, ((1,), 1))
    assert p == Polynomial.zero(1)
    assert p.terms == {}


def test_pieri_rule_instance():
    # s_(1) * s_(1) = s_(2) + s_(1,1) in two variables.
    s1 = genfun(PLAIN, (1,), 2)
    assert s1 * s1 == genfun(PLAIN, (2,), 2) + genfun(PLAIN, (1, 1), 2)


def test_schur_2_1_coefficients():
    s = genfun(PLAIN, (2, 1), 3)
    assert s.coeff((2, 1, 0)) == 1
    assert s.coeff((1, 1, 1)) == 2
    assert sum(abs(c) for c in s.terms.values()) == 8


def test_grothendieck_2_1_coefficients():
    g = genfun(SET_VALUED, (2, 1), 3)
    assert g.coeff((2, 1, 0)) == 1
    assert g.coeff((1, 1, 1)) == 2
    assert g.coeff((2, 2, 0)) == -1
    assert g.coeff((2, 1, 1)) == -3


def test_qschur_3_3_3_coefficient():
    q = genfun(SHIFTED, (3, 3, 3), 3)
    assert q.coeff((3, 2, 1)) == 8


def test_gq_2_2_coefficients():
    gq = genfun(SHIFTED_SET_VALUED, (2, 2), 2)
    assert gq.coeff((2, 1)) == 4
    assert gq.coeff((3, 1)) == -2


def test_genfun_empty_shape():
    for family in (PLAIN, SET_VALUED, SHIFTED, SHIFTED_SET_VALUED):
        assert genfun(family, (), 2) == Polynomial.one(2)


def test_genfun_symmetric():
    for family in (PLAIN, SET_VALUED):
        for lam in ((1,), (2,), (2, 1), (2, 2)):
            assert genfun(family, lam, 3).is_symmetric()
    for family in (SHIFTED, SHIFTED_SET_VALUED):
        for lam in ((1,), (2,), (2, 2), (3, 2)):
            assert genfun(family, lam, 2).is_symmetric()


def test_lowest_degree_truncation_g_to_s():
    for lam in partitions_up_to(6):
        g = genfun(SET_VALUED, lam, 3)
        assert g.homogeneous_component(sum(lam)) == genfun(PLAIN, lam, 3)
        if g.terms:  # shapes taller than the variable count give zero
            assert g.min_degree() == sum(lam)


def test_lowest_degree_truncation_gq_to_q():
    for lam in partitions_up_to(8):
        if not lam or lam[-1] < len(lam) or up_cell_count(lam) > 6:
            continue
        gq = genfun(SHIFTED_SET_VALUED, lam, 3)
        assert gq.homogeneous_component(up_cell_count(lam)) == genfun(SHIFTED, lam, 3)


def test_grothendieck_sign_grading():
    for lam in ((1,), (2,), (2, 1)):
        g = genfun(SET_VALUED, lam, 3)
        for m, c in g.terms.items():
            expected = -1 if (sum(m) - sum(lam)) % 2 else 1
            assert c * expected > 0


def test_domino_genfun_plain_instances():
    assert domino_genfun(PLAIN, (2,), 1) == P(1, ((1,), 1))
    lhs = genfun(PLAIN, (1,), 2) * genfun(PLAIN, (1,), 2)
    assert domino_genfun(PLAIN, (2, 2), 2) == lhs


def test_domino_genfun_rejects_unpavable():
    with pytest.raises(ValueError):
        domino_genfun(PLAIN, (5, 3, 3, 2, 1), 2)


def test_grlex_term_order():
    p = P(2, ((0, 2), 1), ((1, 0), 3), ((2, 0), 2), ((1, 1), 5))
    ms = [m for m, _ in p.sorted_terms()]
    assert ms == [(1, 0), (0, 2), (1, 1), (2, 0)]


def test_str_format():
    p = P(2, ((1, 2), 3), ((0, 0), -1))
    assert str(p) == "-1\n3 * x1^1 x2^2"


def homogeneous_monomials(n, degree):
    def rec(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for e in range(remaining + 1):
            yield from rec(prefix + (e,), remaining - e, slots - 1)

    yield from rec((), degree, n)


def complete_homogeneous(n, degree):
    return Polynomial(n, {m: 1 for m in homogeneous_monomials(n, degree)})


def elementary(n, degree):
    return Polynomial(
        n,
        {m: 1 for m in homogeneous_monomials(n, degree) if all(e <= 1 for e in m)},
    )


def q_series_coefficient(n, degree):
    """Coefficient of t^degree in prod_i (1+x_i t)/(1-x_i t), truncated.

    Independent of tableau enumeration: each factor expands to
    1 + 2*x_i*t + 2*x_i^2*t^2 + ..., and the factors are convolved.
    """
    series = [Polynomial.one(n)] + [Polynomial.zero(n)] * degree
    for i in range(n):
        factor = [Polynomial.one(n)] + [
            Polynomial(n, {tuple(k if j == i else 0 for j in range(n)): 2})
            for k in range(1, degree + 1)
        ]
        series = [
            sum(
                (series[a] * factor[d - a] for a in range(d + 1)),
                Polynomial.zero(n),
            )
            for d in range(degree + 1)
        ]
    return series[degree]


def test_one_row_schur_is_complete_homogeneous():
    for n in (2, 3):
        for m in range(1, 5):
            assert genfun(PLAIN, (m,), n) == complete_homogeneous(n, m)


def test_one_column_schur_is_elementary():
    for n in (2, 3, 4):
        for m in range(1, n + 1):
            assert genfun(PLAIN, (1,) * m, n) == elementary(n, m)


def test_one_row_qschur_matches_series_expansion():
    for n in (2, 3):
        for m in range(1, 5):
            assert genfun(SHIFTED, (m,), n) == q_series_coefficient(n, m), (n, m)


monomials = st.tuples(
    st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3)
)
polys = st.dictionaries(monomials, st.integers(min_value=-5, max_value=5), max_size=4).map(
    lambda terms: Polynomial(2, terms)
)


@given(polys, polys, polys)
@settings(max_examples=80, deadline=None)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
