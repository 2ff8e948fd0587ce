from fractions import Fraction

from hurwitzlab.bm import (
    bm_step_projection,
    bm_vs_hurwitz,
    count_w_tilde_summands,
    cutjoin_t_check,
    d1d2_h02_diagonal,
    h_poly_from_fit,
    three_forms_agree,
    w_from_fit,
    w_invariants,
    w_poly,
    x_expand_multi,
)
from hurwitzlab.multipoly import MultiPoly


def t(i, n):
    return MultiPoly.var(n, i)


def expected_w03():
    n = 3
    out = MultiPoly.const(n, -1)
    for i in range(3):
        out = out * (t(i, n) ** 2 * (1 + t(i, n)))
    return out


def expected_w11():
    # (-3 t^5 - 5 t^4 - t^3 + t^2)/24
    return MultiPoly(
        1,
        {
            (5,): Fraction(-3, 24),
            (4,): Fraction(-5, 24),
            (3,): Fraction(-1, 24),
            (2,): Fraction(1, 24),
        },
    )


def test_two_point_diagonal_closed_form():
    diag = d1d2_h02_diagonal()
    want = MultiPoly(
        1, {(4,): Fraction(1, 4), (3,): Fraction(1, 3), (0,): Fraction(1, 12)}
    )
    assert diag == want


def test_w03_value():
    assert w_poly(0, 3) == expected_w03()


def test_w11_value():
    assert w_poly(1, 1) == expected_w11()


def test_w_tilde_summand_counts():
    # (0,3): two nonzero summands; (1,1): only the handle term survives;
    # (1,2): five summands, three of which survive the W_{0,1} = 0 pruning
    assert count_w_tilde_summands(0, 3) == (5, 2)
    assert count_w_tilde_summands(1, 1) == (3, 1)
    assert count_w_tilde_summands(1, 2) == (5, 3)


def test_w_from_fit_matches_bm():
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2)]:
        assert w_poly(g, n) == w_from_fit(g, n), (g, n)


def test_three_forms_agree_small():
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2)]:
        assert three_forms_agree(g, n), (g, n)


def test_projection_route_matches_residue_route():
    for (g, n) in [(0, 3), (1, 1), (1, 2)]:
        assert bm_step_projection(g, n) == w_poly(g, n), (g, n)


def test_w_invariants_small():
    for (g, n) in [(0, 3), (1, 1), (0, 4), (1, 2)]:
        inv = w_invariants(g, n)
        assert inv["symmetric"], (g, n)
        assert inv["degree_ok"], (g, n)
        assert inv["divisible_by_t_squared"], (g, n)


def test_odd_principal_part_of_w():
    # W_{g,n} + W_{g,n}(sigma-tilde(t1), ...) has no pole at P in t1
    from hurwitzlab.lambert import poly_to_w_laurent, sigma_z

    w = w_poly(1, 1)
    f = poly_to_w_laurent(w, 12)
    sym = f + f.compose(sigma_z(14))
    assert all(sym.coeff(i) == 0 for i in range(f.low, 0))


def test_x_expansion_01_3():
    # coefficient of x1 x2 x3 in W_{0,3} is h(0;1,1,1)/b! * 1*1*1 = 24/24
    got = x_expand_multi(w_poly(0, 3), 2)
    assert got[(1, 1, 1)] == 1


def test_bm_vs_hurwitz_small():
    assert bm_vs_hurwitz(1, 1, 6)["coefficients_checked"] == 6
    assert bm_vs_hurwitz(0, 3, 3)["coefficients_checked"] == 27


def test_w02_x_expansion_sanity():
    # the x-expansion of W_{0,2} minus the double x-pole equals the mixed
    # second derivative of the unstable two-point function:
    # sum ab/(a+b) a^a b^b/(a! b!) x1^a x2^b, checked via nested Laurent series
    from math import factorial

    from hurwitzlab.lambert import t_of_x
    from hurwitzlab.series import Series

    order = 6
    inner_order = 14
    tx = t_of_x(inner_order)
    # inner ring: Laurent series in x2; outer ring: series in x1
    t1 = Series(0, [Series.const(c, None) for c in tx.coeffs], order)
    t2_inner = Series(0, list(tx.coeffs), inner_order)
    t2_lift = Series.const(t2_inner, order)  # constant in x1
    num = t1**2 * (1 + t1) * t2_lift**2 * (1 + t2_lift)
    den = (t2_lift - t1) ** 2
    w02 = num * den.reciprocal(order)
    x1 = Series.x(order)
    x2_lift = Series.const(Series.x(inner_order), order)
    xker = (x1 * x2_lift) * ((x2_lift - x1) ** 2).reciprocal(order)
    diff = w02 - xker
    checked = 0
    for a in range(1, order + 1):
        inner = diff.coeff(a)
        if isinstance(inner, (int, Fraction)):
            assert inner == 0
            continue
        assert all(inner.coeff(q) == 0 for q in range(inner.low, 1))
        top = order if inner.order is None else min(order, inner.order)
        for b in range(1, top + 1):
            want = (
                Fraction(a * b, a + b)
                * Fraction(a**a, factorial(a))
                * Fraction(b**b, factorial(b))
            )
            assert inner.coeff(b) == want, (a, b)
            checked += 1
    assert checked >= 25


def test_cutjoin_identity_03_11():
    assert cutjoin_t_check(0, 3)["identity"] == "holds"
    assert cutjoin_t_check(1, 1)["identity"] == "holds"


def test_cutjoin_identity_04_12():
    assert cutjoin_t_check(0, 4)["identity"] == "holds"
    assert cutjoin_t_check(1, 2)["identity"] == "holds"


def test_cutjoin_top_degree_layer_04():
    # the highest-degree homogeneous layer is a nontrivial sub-identity
    rep = cutjoin_t_check(0, 4)
    lhs, rhs = rep["lhs"], rep["rhs"]
    top = lhs.total_degree()
    assert top == rhs.total_degree()
    lhs_top = {e: c for e, c in lhs.terms.items() if sum(e) == top}
    rhs_top = {e: c for e, c in rhs.terms.items() if sum(e) == top}
    assert lhs_top and lhs_top == rhs_top


def test_w05_invariants():
    inv = w_invariants(0, 5)
    assert inv["symmetric"] and inv["degree_ok"] and inv["divisible_by_t_squared"]


def test_odd_principal_part_12():
    # symmetrizing the first slot of W_{1,2} kills the pole at the branch point
    from hurwitzlab.lambert import sigma_z
    from hurwitzlab.series import Series
    from fractions import Fraction as F

    w = w_poly(1, 2)
    order = 14
    t1_pows = [Series.laurent(0, [F(1)], order)]
    for _ in range(12):
        t1_pows.append(t1_pows[-1] * Series.laurent(-1, [F(1)], order))
    f = Series.zero(order)
    for a, coef in enumerate(w.as_poly_in(0)):
        f = f + t1_pows[a] * coef
    sym = f + f.compose(sigma_z(order + 2))
    for i in range(f.low, 0):
        c = sym.coeff(i)
        if not isinstance(c, (int, type(F(0)))):
            assert c.is_zero(), i
        else:
            assert c == 0, i


def test_h_poly_values():
    # H_{1,1} = (1 + t - t^2 - t^3)/24
    h11 = h_poly_from_fit(1, 1)
    want = MultiPoly(
        1,
        {
            (0,): Fraction(1, 24),
            (1,): Fraction(1, 24),
            (2,): Fraction(-1, 24),
            (3,): Fraction(-1, 24),
        },
    )
    assert h11 == want
