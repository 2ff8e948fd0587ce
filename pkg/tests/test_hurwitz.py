from fractions import Fraction

import pytest

from hurwitzlab.hurwitz import (
    ConflictError,
    HurwitzTable,
    PolynomialityError,
    ResourceGuardError,
    branch_count,
    cut_and_join_evolve,
    disconnected_by_b,
    fit_P_polynomial,
    h_bruteforce,
    h_connected,
    h_disconnected_char,
    hurwitz_scaled_value,
    set_partitions,
)
from hurwitzlab.partitions import enumerate_partitions


def test_branch_count():
    assert branch_count(1, (2,)) == 3
    assert branch_count(0, (1, 1, 1)) == 4


def test_disconnected_character_values():
    assert h_disconnected_char(0, (1, 1, 1)) == 27
    assert h_disconnected_char(1, (2,)) == Fraction(1, 2)
    assert h_disconnected_char(0, (1,)) == 1
    # b = 0 identity cover for every degree
    for d in range(1, 7):
        mu = (1,) * d
        assert disconnected_by_b(mu, 0) == 1


def test_connected_values():
    assert h_connected(0, (1, 1, 1)) == 24
    assert h_connected(1, (1,)) == 0
    assert h_connected(0, (2, 1)) == 4
    for a in range(1, 7):
        assert h_connected(0, (a,)) == Fraction(a) ** (a - 3) * 1, a
    # degree-4 identity-profile count: 2880 transitive 6-tuples
    assert h_connected(0, (1, 1, 1, 1)) == 2880


def test_connected_no_admissible_splits():
    assert disconnected_by_b((1, 1), 2) == 1
    assert h_connected(0, (1, 1)) == 1


def test_bruteforce_small():
    assert h_bruteforce(0, (1, 1, 1)) == 24
    assert h_bruteforce(1, (2,)) == Fraction(1, 2)
    assert h_bruteforce(0, (2, 1)) == h_connected(0, (2, 1))
    assert h_bruteforce(0, (1,)) == 1
    assert h_bruteforce(1, (1,)) == 0


def test_bruteforce_guard():
    with pytest.raises(ResourceGuardError):
        h_bruteforce(0, (8, 1))
    with pytest.raises(ResourceGuardError):
        h_bruteforce(4, (2,))


def test_cut_and_join_matches_character_route():
    table = cut_and_join_evolve(d_max=6, b_max=8)
    for d in range(1, 7):
        for mu in enumerate_partitions(d):
            for b in range(0, 9):
                assert table[(mu, b)] == disconnected_by_b(mu, b), (mu, b)


def test_cut_and_join_seed_steps():
    table = cut_and_join_evolve(d_max=2, b_max=2)
    assert table[((2,), 1)] == Fraction(1, 2)
    assert table[((1, 1), 2)] == 1
    assert table[((1, 1), 0)] == 1
    assert table[((2,), 0)] == 0


def test_three_route_equality_connected():
    # brute force vs character-route connected numbers
    for d in range(1, 6):
        for mu in enumerate_partitions(d):
            for g in range(0, 3):
                if branch_count(g, mu) > 8:
                    continue
                assert h_bruteforce(g, mu) == h_connected(g, mu), (g, mu)


def test_set_partitions_bell():
    assert len(list(set_partitions(range(4)))) == 15
    assert list(set_partitions([])) == [()]


def test_table_conflicts_and_roundtrip(tmp_path):
    t = HurwitzTable()
    t.insert(1, (2,), Fraction(1, 2), "character")
    t.insert(1, (2,), Fraction(1, 2), "brute")
    with pytest.raises(ConflictError):
        t.insert(1, (2,), Fraction(1, 3), "cut-join")
    p = tmp_path / "cache.json"
    t.save(p)
    t2 = HurwitzTable.load(p)
    assert t2.get(1, (2,)) == Fraction(1, 2)
    assert t2.entries[(1, (2,))][1] == {"character", "brute"}
    # corrupted value aborts on load
    text = p.read_text().replace("1/2", "1/3")
    p.write_text(text)
    t3 = HurwitzTable.load(p)
    with pytest.raises(ConflictError):
        for (g, mu), (v, routes) in t.entries.items():
            t3.insert(g, mu, v, "character")
    # empty file loads an empty table
    p2 = tmp_path / "empty.json"
    p2.write_text("")
    assert HurwitzTable.load(p2).entries == {}


def test_scaled_values():
    assert hurwitz_scaled_value(1, (2,)) == Fraction(1, 24)
    assert hurwitz_scaled_value(0, (1, 1, 1)) == 1


def test_fit_01_and_11():
    fit = fit_P_polynomial(0, 3)
    assert fit.poly.eval([1, 1, 1]) == 1
    assert fit.poly.total_degree() == 0
    fit11 = fit_P_polynomial(1, 1, grid_side=4, holdout=2)
    # P(mu) = (mu - 1)/24
    assert fit11.poly.coeff((0,)) == Fraction(-1, 24)
    assert fit11.poly.coeff((1,)) == Fraction(1, 24)
    assert fit11.report["holdout_ok"]


def test_fit_04_is_sum_of_parts():
    fit = fit_P_polynomial(0, 4)
    n = 4
    for i in range(n):
        e = [0] * n
        e[i] = 1
        assert fit.poly.coeff(tuple(e)) == 1
    assert fit.poly.coeff((0,) * n) == 0
    assert fit.poly.eval([1, 1, 1, 1]) == 4
    assert fit.report["symmetric"] and fit.report["total_degree_ok"]


def test_fit_rejects_unstable():
    with pytest.raises(ValueError):
        fit_P_polynomial(0, 2)


def test_fit_detects_non_polynomial_data():
    calls = {}

    def fake(mu):
        # polynomial on the grid, broken on the first holdout point
        return Fraction(0) if max(mu) <= 4 else Fraction(1)

    with pytest.raises(PolynomialityError):
        fit_P_polynomial(1, 1, grid_side=4, holdout=1, value_fn=fake)
