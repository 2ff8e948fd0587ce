from fractions import Fraction

import pytest

from hurwitzlab.fock import (
    FockVector,
    a_commutator_check,
    a_connected,
    a_correlator,
    a_vacuum_expectation_symbolic,
    alpha_apply,
    dim_path,
    e_operator_apply,
    f2_eigenvalue,
    h_from_a_correlator,
    level_occupied,
    maya_string,
    pair_exp_alpha1,
    vacuum,
    vev_hurwitz,
)
from hurwitzlab.hurwitz import disconnected_by_b
from hurwitzlab.partitions import central_character_f2, dim_hook, enumerate_partitions
from hurwitzlab.series import Series


def test_vacuum_levels():
    assert level_occupied((), -1)
    assert level_occupied((), -7)
    assert not level_occupied((), 1)
    assert level_occupied((2,), 3)  # 2*2 - 2 + 1 = 3
    assert not level_occupied((2,), -1)


def test_alpha_minus_one_creates_single_box():
    v = alpha_apply(-1, vacuum(4))
    assert v.coeffs == {(1,): Fraction(1)}


def test_alpha_minus_two_power_sum_signs():
    v = alpha_apply(-2, vacuum(4))
    assert v.coeffs == {(2,): Fraction(1), (1, 1): Fraction(-1)}


def test_alpha_one_closes_pairing():
    v = alpha_apply(1, alpha_apply(-1, vacuum(4)))
    assert v.coeffs == {(): Fraction(1)}


def test_alpha_commutator_value():
    # [alpha_2, alpha_{-2}] = 2 on the vacuum
    v = vacuum(6)
    up = alpha_apply(-2, v)
    down_up = alpha_apply(2, up)
    assert down_up.coeffs == {(): Fraction(2)}


def test_f2_matches_partition_route():
    for d in range(0, 7):
        for lam in enumerate_partitions(d):
            assert f2_eigenvalue(lam) == central_character_f2(lam)


def test_dim_path_is_tableau_count():
    for d in range(0, 7):
        for lam in enumerate_partitions(d):
            assert dim_path(lam) == dim_hook(lam)


def test_e_operator_vacuum():
    # E_0(z)|0> = |0>/zeta(z): z^{-1} coefficient 1, z^0 and z^1 vanish
    v = vacuum(4)
    assert e_operator_apply(0, -1, v).coeffs == {(): Fraction(1)}
    assert e_operator_apply(0, 0, v).coeffs == {}
    assert e_operator_apply(0, 1, v).coeff(()) == Fraction(-1, 24)
    # E_k(z)|0> = 0 for k > 0
    for j in range(0, 4):
        assert e_operator_apply(2, j, v).coeffs == {}


def test_e_commutator_scalar_case():
    # [E_1(z), E_{-1}(w)] = zeta(w + z) E_0(z + w); on the vacuum the right
    # side is zeta(w+z)/zeta(z+w) = 1, i.e. the (p,q)=(0,0) coefficient is 1
    v = vacuum(6)

    def coeff_of(n, j, vec):
        return e_operator_apply(n, j, vec)

    # z^0 w^0 of E_1(z)E_{-1}(w)|0> - E_{-1}(w)E_1(z)|0>
    a = e_operator_apply(1, 0, e_operator_apply(-1, 0, v))
    b = e_operator_apply(-1, 0, e_operator_apply(1, 0, v))
    comm = dict(a.coeffs)
    for lam, c in b.coeffs.items():
        comm[lam] = comm.get(lam, 0) - c
    assert comm == {(): Fraction(1)}


def _e_commutator_bidegree(a, b, p, q, v):
    """[z^p w^q] of (E_a(z) E_b(w) - E_b(w) E_a(z)) v."""
    first = e_operator_apply(a, p, e_operator_apply(b, q, v))
    second = e_operator_apply(b, q, e_operator_apply(a, p, v))
    out = dict(first.coeffs)
    for lam, c in second.coeffs.items():
        out[lam] = out.get(lam, 0) - c
    return {lam: c for lam, c in out.items() if c}


def test_e_commutator_diagonal_case():
    # [E_1(z), E_{-1}(w)] = zeta(w + z) E_0(z + w); on v_lambda the right
    # side is the scalar zeta(s) f_lambda(s) at s = z + w.
    from math import comb

    from hurwitzlab.fock import _diagonal_e0_x
    from hurwitzlab.series import zeta_series

    for lam in [(), (1,), (2, 1)]:
        v = FockVector({lam: Fraction(1)}, 8)
        g = zeta_series(8) * _diagonal_e0_x(lam, 8)
        for p in range(0, 3):
            for q in range(0, 3):
                got = _e_commutator_bidegree(1, -1, p, q, v)
                want = comb(p + q, p) * g.coeff(p + q)
                offdiag = {k: c for k, c in got.items() if k != lam}
                assert offdiag == {}, (lam, p, q)
                assert got.get(lam, Fraction(0)) == want, (lam, p, q)


def test_e_commutator_determinant_orientation():
    # [E_1(z), E_{-2}(w)] = zeta(w + 2z) E_{-1}(z + w); on the vacuum the
    # right side is zeta(w + 2z) v_(1), pinning the sign convention in the
    # argument of zeta.
    v = vacuum(8)
    expected = {
        (1, 0): Fraction(2),
        (0, 1): Fraction(1),
        (1, 2): Fraction(1, 4),
        (3, 0): Fraction(1, 3),
        (0, 0): Fraction(0),
        (2, 0): Fraction(0),
    }
    for (p, q), want in expected.items():
        got = _e_commutator_bidegree(1, -2, p, q, v)
        assert got.get((1,), Fraction(0)) == want, (p, q)
        assert all(k == (1,) for k in got), (p, q)


def test_vev_hurwitz_examples():
    assert vev_hurwitz(1, (2,)) == Fraction(1, 2)
    assert vev_hurwitz(0, (1, 1, 1)) == 27
    assert vev_hurwitz(0, (1,)) == 1


def test_vev_matches_character_route():
    for d in range(1, 7):
        for mu in enumerate_partitions(d):
            for b in range(0, 7):
                if (b - d - len(mu)) % 2 == 0:
                    g2 = b - d - len(mu) + 2
                    if g2 < 0 or g2 % 2:
                        continue
                    g = g2 // 2
                    assert vev_hurwitz(g, mu) == disconnected_by_b(mu, b), (mu, b)


def _exp_f2_apply(v, u_order):
    from math import factorial as fac

    out = FockVector({}, v.cutoff, v.truncated)
    for lam, c in v.coeffs.items():
        f2 = f2_eigenvalue(lam)
        exp_u = Series(0, [f2**p / fac(p) for p in range(u_order + 1)], u_order)
        out.add(lam, c * exp_u)
    return out


def test_hurwexpr_u_series_and_conjugation():
    # <e^{alpha_1} e^{u F2} prod alpha_{-mu}/mu> has u^b coefficient equal to
    # the b-transposition disconnected number over b!; and inserting
    # e^{-u F2} e^{-alpha_1} on the right changes nothing because both
    # operators fix the vacuum.
    from math import factorial as fac

    u_order = 4
    for mu in [(1,), (2,), (2, 1), (1, 1)]:
        cutoff = sum(mu)
        v = vacuum(cutoff, one=Series.const(Fraction(1), u_order))
        assert alpha_apply(1, v).coeffs == {}  # alpha_1 kills the vacuum
        assert f2_eigenvalue(()) == 0  # so does the exponent of e^{-u F2}
        for m in reversed(mu):
            v = alpha_apply(-m, v).scale(Fraction(1, m))
        series = pair_exp_alpha1(_exp_f2_apply(v, u_order))
        for b in range(0, u_order + 1):
            assert series.coeff(b) == disconnected_by_b(mu, b) / fac(b), (mu, b)


def test_maya_string():
    s = maya_string((), 3)
    assert s == "○○○|●●●"


def test_one_point_a_correlator_printed_terms():
    # <A(z,uz)> = 1/(uz) + z(z-1)/24 u + O(u^2) at integer z
    for m in range(1, 7):
        got = a_correlator((m,), 1)
        assert got.coeff(-1) == Fraction(1, m), m
        assert got.coeff(0) == 0, m
        assert got.coeff(1) == Fraction(m * (m - 1), 24), m


def test_one_point_connected_column():
    # genus-zero connected one-point coefficient is 1/z
    got = a_connected((3,), 0)
    assert got.coeff(-1) == Fraction(1, 3)


def test_two_point_connected_genus_zero():
    # z1 sum (-1)^k (z1/z2)^k at (z1, z2) = (1, 3) is 3/4
    conn = a_connected((1, 3), 0)
    assert conn.coeff(0) == Fraction(3, 4)


def test_two_point_symmetry():
    a = a_connected((1, 3), 1)
    b = a_connected((3, 1), 1)
    for q in range(-2, 2):
        assert a.coeff(q) == b.coeff(q)


def test_hconexpr_reproduces_hurwitz():
    assert h_from_a_correlator(1, (2,)) == Fraction(1, 2)
    assert h_from_a_correlator(0, (1, 1, 1)) == 24
    assert h_from_a_correlator(0, (2, 1)) == 4


def _inner(biv, zp, q):
    c = biv.coeff(zp)
    if isinstance(c, (int, Fraction)):
        assert c == 0
        return Fraction(0)
    return c.coeff(q)


def test_symbolic_vacuum_expectation_printed():
    got = a_vacuum_expectation_symbolic(3, 1, 6)
    # u^{-1}: 1/z; u^0: 0; u^1: z(z-1)/24
    assert _inner(got, -1, -1) == 1
    for zp in range(0, got.order + 1):
        assert _inner(got, zp, -1) == 0, zp
    assert _inner(got, 2, 1) == Fraction(1, 24)
    assert _inner(got, 1, 1) == Fraction(-1, 24)
    assert _inner(got, 0, 1) == 0
    assert _inner(got, -1, 1) == 0
    for zp in range(-1, got.order + 1):
        assert _inner(got, zp, 0) == 0, zp


def test_a_correlator_polynomiality_one_point():
    from hurwitzlab.fock import a_polynomiality_check

    rep = a_polynomiality_check(1, 1, 3, [(4,), (5,)])
    assert rep["symmetric"] and rep["holdout_ok"]
    assert rep["poly"].terms == {(0,): Fraction(-1, 24), (1,): Fraction(1, 24)}


def test_a_correlator_polynomiality_two_point():
    # the u^2 layer of the connected two-point correlator interpolates to
    # the same symmetric polynomial as the scaled Hurwitz fit
    from hurwitzlab.fock import a_polynomiality_check
    from hurwitzlab.hurwitz import fit_P_polynomial

    rep = a_polynomiality_check(2, 2, 3, [(4, 1)])
    assert rep["symmetric"] and rep["holdout_ok"]
    assert rep["poly"] == fit_P_polynomial(1, 2).poly


def test_unstable_pairs_rejected():
    from hurwitzlab.fock import a_polynomiality_check

    with pytest.raises(ValueError):
        a_polynomiality_check(1, -1, 3, [])
    with pytest.raises(ValueError):
        a_polynomiality_check(2, 0, 3, [])


def test_commutator_identity_cases():
    # [A_1, A_0] = +1, [A_0, A_1] = -1, [A_2, A_2] = 0
    r = a_commutator_check(1, 0, z_order=4, u_order=2, cutoff=5, test_states=((), (1,), (2, 1)))
    assert r["status"] == "pass", r
    r = a_commutator_check(0, 1, z_order=4, u_order=2, cutoff=5, test_states=((), (1,)))
    assert r["status"] == "pass", r
    r = a_commutator_check(2, 2, z_order=4, u_order=2, cutoff=5, test_states=((), (1,)))
    assert r["status"] == "pass", r
