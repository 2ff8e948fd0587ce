"""Charge-zero semi-infinite wedge space on a finite energy window.

Basis states are partitions; the occupied fermion levels of v_lambda are the
half-integers lambda_i - i + 1/2.  All level bookkeeping below uses doubled
(odd integer) levels so that everything stays in Z.

Operators: the bosonic modes alpha_m, the diagonal transposition operator F2,
the generating fields E_n(z) with their 1/zeta(z) regularization at n = 0,
and the conjugated raising operators A(a, b) used for Hurwitz correlators,
either evaluated at a positive integer a or with a kept symbolic (bivariate
series in z and u).

Everything respects an energy cutoff; states pushed above it are dropped and
the vector is flagged as truncated.  High-level entry points recompute at two
cutoffs and require agreement before a value is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .hurwitz import branch_count, connected_from_disconnected
from .partitions import Partition, check_partition
from .rationals import pochhammer
from .series import Series, is_zero_coeff, zeta_series

# -- Maya-level bookkeeping (doubled half-integer levels) ------------------------


def energy(lam: Partition) -> int:
    return sum(lam)


def _occ_window(lam: Partition, depth: int):
    """Occupied levels 2 lam_i - 2i + 1 for rows i = 1..depth (0-padded)."""
    return [2 * (lam[i] if i < len(lam) else 0) - 2 * i - 1 for i in range(depth)]


def level_occupied(lam: Partition, khat: int) -> bool:
    if khat % 2 == 0:
        raise ValueError("levels are odd integers (doubled half-integers)")
    ell = len(lam)
    if khat <= -2 * ell - 1:
        return True
    return khat in _occ_window(lam, ell)


def e_move(lam: Partition, jhat: int, ihat: int):
    """Apply E_{i,j} (replace occupied level j by i); None if it annihilates.

    Returns (new_partition, sign) with the fermionic reordering sign.
    """
    if not level_occupied(lam, jhat):
        return None
    if ihat == jhat:
        return lam, 1
    if level_occupied(lam, ihat):
        return None
    depth = len(lam) + (abs(ihat) + abs(jhat)) // 2 + 2
    occ = _occ_window(lam, depth)
    lo, hi = min(ihat, jhat), max(ihat, jhat)
    sign = -1 if sum(1 for x in occ if lo < x < hi and x != jhat) % 2 else 1
    occ[occ.index(jhat)] = ihat
    occ.sort(reverse=True)
    new = []
    for i, level in enumerate(occ):
        a, r = divmod(level + 2 * i + 1, 2)
        assert r == 0
        if a < 0:
            return None  # outside any valid charge-zero state (cannot happen)
        new.append(a)
    while new and new[-1] == 0:
        new.pop()
    return tuple(new), sign


def f2_eigenvalue(lam: Partition) -> Fraction:
    """Eigenvalue of sum_k (k^2/2) E_{kk} read off the occupied window."""
    total = 0
    for i, a in enumerate(lam):
        khat = 2 * a - 2 * i - 1
        vhat = -2 * i - 1
        total += khat * khat - vhat * vhat
    return Fraction(total, 8)


def maya_string(lam: Partition, window: int = 5) -> str:
    """Levels from high to low, filled/empty circles, bar at level zero."""
    pos = "".join(
        "●" if level_occupied(lam, k) else "○"
        for k in range(2 * window - 1, 0, -2)
    )
    neg = "".join(
        "●" if level_occupied(lam, k) else "○"
        for k in range(-1, -2 * window, -2)
    )
    return pos + "|" + neg


# -- vectors ----------------------------------------------------------------------


@dataclass
class FockVector:
    """Finite linear combination of basis states with an energy cutoff."""

    coeffs: dict = field(default_factory=dict)
    cutoff: int = 0
    truncated: bool = False

    def add(self, lam: Partition, c):
        if is_zero_coeff(c):
            return
        if energy(lam) > self.cutoff:
            self.truncated = True
            return
        cur = self.coeffs.get(lam)
        new = c if cur is None else cur + c
        if is_zero_coeff(new):
            self.coeffs.pop(lam, None)
        else:
            self.coeffs[lam] = new

    def scale(self, c) -> "FockVector":
        out = FockVector({}, self.cutoff, self.truncated)
        for lam, v in self.coeffs.items():
            out.add(lam, v * c)
        return out

    def __add__(self, other: "FockVector") -> "FockVector":
        out = FockVector(dict(self.coeffs), min(self.cutoff, other.cutoff),
                         self.truncated or other.truncated)
        for lam, v in other.coeffs.items():
            out.add(lam, v)
        return out

    def coeff(self, lam: Partition):
        return self.coeffs.get(tuple(lam), 0)


def vacuum(cutoff: int, one=Fraction(1)) -> FockVector:
    return FockVector({(): one}, cutoff)


def alpha_apply(m: int, v: FockVector) -> FockVector:
    """Apply alpha_m = E_m(0): move one occupied level down by m."""
    if m == 0:
        raise ValueError("alpha_0 is excluded")
    out = FockVector({}, v.cutoff, v.truncated)
    for lam, c in v.coeffs.items():
        depth = len(lam) + abs(m) + 2
        for jhat in _occ_window(lam, depth):
            res = e_move(lam, jhat, jhat - 2 * m)
            if res is not None:
                mu, sign = res
                out.add(mu, c * sign if sign != 1 else c)
    return out


def f2_apply(v: FockVector) -> FockVector:
    out = FockVector({}, v.cutoff, v.truncated)
    for lam, c in v.coeffs.items():
        out.add(lam, c * f2_eigenvalue(lam))
    return out


@lru_cache(maxsize=None)
def dim_path(lam: Partition) -> int:
    """Number of alpha_1 box-removal paths from lam to the vacuum."""
    if not lam:
        return 1
    total = 0
    depth = len(lam) + 3
    for jhat in _occ_window(lam, depth):
        res = e_move(lam, jhat, jhat - 2)
        if res is not None:
            mu, sign = res
            assert sign == 1
            total += dim_path(mu)
    return total


def pair_exp_alpha1(v: FockVector):
    """<0| e^{alpha_1} v, using the alpha_1 walk for each basis state."""
    total = 0
    for lam, c in v.coeffs.items():
        total = total + c * Fraction(dim_path(lam), factorial(energy(lam)))
    return total


def e_operator_apply(n: int, j: int, v: FockVector, z_order: int = 8) -> FockVector:
    """Coefficient of z^j in E_n(z) v, including the n = 0 regularization."""
    out = FockVector({}, v.cutoff, v.truncated)
    if n == 0:
        for lam, c in v.coeffs.items():
            w = _diagonal_e0_series(lam, max(j, z_order))
            out.add(lam, c * w.coeff(j))
        return out
    if j < 0:
        return out
    for lam, c in v.coeffs.items():
        depth = len(lam) + abs(n) + 2
        for jh in _occ_window(lam, depth):
            res = e_move(lam, jh, jh - 2 * n)
            if res is None:
                continue
            mu, sign = res
            rate = Fraction(jh - n, 2)  # the level minus n/2
            out.add(mu, c * sign * rate**j / factorial(j))
    return out


@lru_cache(maxsize=None)
def _diagonal_e0_series(lam: Partition, order: int) -> Series:
    """E_0(z) eigenvalue on v_lambda: finite exponential sum plus 1/zeta(z)."""
    acc = zeta_series(order + 2).reciprocal(order)
    for i, a in enumerate(lam):
        top = Fraction(2 * a - 2 * i - 1, 2)
        bot = Fraction(-2 * i - 1, 2)
        coeffs = [
            (top**p - bot**p) / factorial(p) for p in range(order + 1)
        ]
        acc = acc + Series(0, coeffs, order)
    return acc


# -- the Hurwitz vacuum expectation ------------------------------------------------


def vev_hurwitz(g: int, mu, cutoff: int | None = None) -> Fraction:
    """<e^{alpha_1} F2^b prod alpha_{-mu_i}/mu_i> from the wedge-space side."""
    mu = check_partition(mu)
    d = sum(mu)
    if cutoff is None:
        cutoff = d
    if cutoff < d:
        raise ValueError("cutoff below the total energy of the insertions")
    b = branch_count(g, mu)
    v = vacuum(cutoff)
    for m in mu:
        v = alpha_apply(-m, v).scale(Fraction(1, m))
    for _ in range(b):
        v = f2_apply(v)
    assert not v.truncated
    return Fraction(pair_exp_alpha1(v))


# -- A-operators at a positive integer ----------------------------------------------


def _x_to_u(xser: Series, m: int, u_order: int) -> Series:
    """Substitute x = u*m into a series in x."""
    lo = xser.low
    hi = xser.high
    order = xser.order
    if order is not None:
        order = min(order, u_order)
        hi = min(hi, order)
    else:
        order = None
    coeffs = [xser.coeff(k) * Fraction(m) ** k for k in range(lo, hi + 1)]
    return Series(lo, coeffs, order)


def _exp_rate_series(rate: Fraction, order: int) -> Series:
    return Series(0, [rate**p / factorial(p) for p in range(order + 1)], order)


def apply_a_integer(m: int, v: FockVector, work_order: int) -> FockVector:
    """Apply A(m, um) for a positive integer m to a vector of u-series.

    All auxiliary series are built at ``work_order``; validity propagates
    through the coefficients, so callers truncate once at the very end.
    """
    if m <= 0:
        raise ValueError("integer A-operator needs a positive argument")
    w = work_order
    zeta_u = _x_to_u(zeta_series(w + m + 4), m, w + m + 2)
    # zeta(um)/(um): shift down one power of u, divide by m
    zeta_over_um = Series(
        0, [zeta_u.coeff(k + 1) * Fraction(1, m) for k in range(0, w + 1)], w
    )
    pref = zeta_over_um**m
    inv_zeta_u = zeta_u.reciprocal()
    kmax = min(v.cutoff, w + v.cutoff + 2)
    zpows: dict[int, Series] = {0: Series.const(Fraction(1), w)}
    for k in range(1, kmax + 1):
        zpows[k] = (zpows[k - 1] * zeta_u).truncate(w)
    for k in range(-1, -m - 1, -1):
        zpows[k] = zpows[k + 1] * inv_zeta_u
    out = FockVector({}, v.cutoff, v.truncated)
    for k in range(-m, kmax + 1):
        coeff_k = zpows[k] * (Fraction(1) / pochhammer(m, k))
        for lam, c in v.coeffs.items():
            base = c * coeff_k
            if is_zero_coeff(base):
                continue
            if k == 0:
                out.add(lam, base * _x_to_u(_diagonal_e0_x(lam, w + 2), m, w))
                continue
            depth = len(lam) + abs(k) + 2
            for jh in _occ_window(lam, depth):
                res = e_move(lam, jh, jh - 2 * k)
                if res is None:
                    continue
                nu, sign = res
                rate = Fraction(m * (jh - k), 2)
                out.add(nu, base * sign * _exp_rate_series(rate, w))
    final = FockVector({}, out.cutoff, out.truncated)
    for lam, c in out.coeffs.items():
        final.add(lam, c * pref)
    return final


@lru_cache(maxsize=None)
def _diagonal_e0_x(lam: Partition, order: int) -> Series:
    """E_0(x) eigenvalue on v_lambda as a Laurent series in the argument x."""
    acc = zeta_series(order + 2).reciprocal(order)
    for i, a in enumerate(lam):
        top = Fraction(2 * a - 2 * i - 1, 2)
        bot = Fraction(-2 * i - 1, 2)
        acc = acc + (_exp_rate_series(top, order) - _exp_rate_series(bot, order))
    return acc


def a_vev(mu, u_order: int, cutoff: int) -> Series:
    """Disconnected <A(mu_1, u mu_1) ... A(mu_n, u mu_n)> at one cutoff."""
    mu = tuple(int(m) for m in mu)
    work = u_order + 2 * sum(mu) + len(mu) + 6
    v = vacuum(cutoff, one=Series.const(Fraction(1), work))
    for m in reversed(mu):
        v = apply_a_integer(m, v, work)
    got = v.coeff(())
    if isinstance(got, int):
        got = Series.zero(u_order)
    if got.order is not None and got.order < u_order:
        raise ValueError("internal working order too small for the request")
    return got.truncate(u_order)


def a_correlator(mu, u_order: int, cutoff: int | None = None, slack: int = 4):
    """Stabilized disconnected A-correlator as a truncated u-Laurent series.

    Computes at the policy cutoff and at cutoff+2 and requires both runs to
    agree on every reported coefficient; raises TruncationUnstable otherwise.
    """
    mu = tuple(int(m) for m in mu)
    if cutoff is None:
        cutoff = sum(mu) + max(u_order, 0) + slack
    first = a_vev(mu, u_order, cutoff)
    second = a_vev(mu, u_order, cutoff + 2)
    if first != second:
        raise TruncationUnstable(
            f"A-correlator for {mu} unstable between cutoffs {cutoff} and {cutoff + 2}"
        )
    return first


class TruncationUnstable(Exception):
    """Two-cutoff protocol detected an unconverged truncation."""


def a_connected(mu, u_order: int, cutoff: int | None = None) -> Series:
    """Connected A-correlator via inclusion-exclusion over set partitions."""
    mu = tuple(int(m) for m in mu)
    n = len(mu)
    # products of Laurent factors lose validity, so work with headroom
    work = u_order + n + 1
    disc = {}
    for mask in range(1, 1 << n):
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        sub_mu = tuple(mu[i] for i in sorted(subset))
        disc[subset] = a_correlator(sub_mu, work, cutoff)
    one = Series.const(Fraction(1), work)
    return connected_from_disconnected(disc, range(n), one).truncate(u_order)


# the inclusion-exclusion over set partitions is shared verbatim with the
# Hurwitz tables; re-exported here under its operator-side name
connected_part = connected_from_disconnected


def a_polynomiality_check(
    n: int, k: int, grid_side: int, holdout_points, cutoff: int | None = None
) -> dict:
    """Interpolate [u^k] of the connected correlator over an integer grid.

    The coefficient divided by the product of the arguments extends to a
    symmetric polynomial away from the unstable pairs (1,-1) and (2,0); the
    fit is verified exactly on the given holdout points.
    """
    if (n, k) in ((1, -1), (2, 0)):
        raise ValueError("unstable pair excluded from the polynomiality check")
    from .hurwitz import _lagrange_basis
    from itertools import product as iproduct
    from .multipoly import MultiPoly

    def value(pt):
        conn = a_connected(tuple(pt), max(k, 0) + 1, cutoff)
        val = conn.coeff(k)
        for z in pt:
            val /= z
        return val

    s = grid_side
    basis = _lagrange_basis(s)
    vals = {pt: value(pt) for pt in iproduct(range(1, s + 1), repeat=n)}
    for ax in range(n):
        nxt: dict = {}
        groups: dict = {}
        for pt, v in vals.items():
            rest = pt[:ax] + pt[ax + 1 :]
            groups.setdefault(rest, {})[pt[ax]] = v
        for rest, column in groups.items():
            coeffs = [Fraction(0)] * s
            for node, v in column.items():
                if not v:
                    continue
                for p, bc in enumerate(basis[node - 1]):
                    coeffs[p] += v * bc
            for p, c in enumerate(coeffs):
                if c:
                    nxt[rest[:ax] + (p,) + rest[ax:]] = c
        vals = nxt
    poly = MultiPoly(n, vals)
    holdout_ok = True
    for pt in holdout_points:
        if poly.eval(pt) != value(pt):
            holdout_ok = False
    return {
        "n": n,
        "k": k,
        "poly": poly,
        "symmetric": poly.is_symmetric(),
        "holdout_ok": holdout_ok,
    }


def h_from_a_correlator(g: int, mu, cutoff: int | None = None) -> Fraction:
    """Connected Hurwitz number from the A-correlator route."""
    mu = check_partition(mu)
    n = len(mu)
    b = branch_count(g, mu)
    u_target = 2 * g - 2 + n
    conn = a_connected(mu, max(u_target, 0) + 1, cutoff)
    coeff = conn.coeff(u_target)
    scale = Fraction(factorial(b))
    for m in mu:
        scale *= Fraction(m ** (m - 1), factorial(m))
    return scale * coeff


# -- symbolic A-operator (bivariate in z and u) ---------------------------------------


def _biv_from_x(xser: Series, z_order: int) -> Series:
    """Lift a series in x to the bivariate ring via x -> u z (z outer).

    The u-dependence of each z-coefficient is exactly one monomial, so the
    inner series are exact; the x-truncation lives entirely in the outer
    order (unknown x-coefficients touch equal z- and u-powers).
    """
    lo = xser.low
    hi = xser.high
    if xser.order is not None:
        hi = min(hi, z_order)
    coeffs = [Series(k, [xser.coeff(k)], None) for k in range(lo, hi + 1)]
    zo = min(z_order, xser.order) if xser.order is not None else z_order
    return Series(lo, coeffs, zo)


def _biv_lift_z(zser: Series, z_order: int) -> Series:
    """Lift a plain z-series to the bivariate ring (constant in u, exact)."""
    lo = zser.low
    hi = zser.high
    coeffs = [Series(0, [zser.coeff(k)], None) for k in range(lo, hi + 1)]
    zo = zser.order if zser.order is not None else z_order
    return Series(lo, coeffs, min(zo, z_order))


def _falling_poly_z(k: int, z_order: int) -> Series:
    """z(z-1)...(z-k+1) as a bivariate series."""
    acc = Series.const(Series.const(Fraction(1), None), z_order)
    z = Series(1, [Series.const(Fraction(1), None)], z_order)
    for j in range(k):
        acc = acc * (z - Series.const(Series.const(Fraction(j), None), z_order))
    return acc


def _inv_pochhammer_z(k: int, z_order: int) -> Series:
    """1/((z+1)(z+2)...(z+k)) expanded in z, lifted to the bivariate ring."""
    acc = Series.const(Fraction(1), z_order)
    for i in range(1, k + 1):
        geom = Series(
            0,
            [Fraction((-1) ** p, i ** (p + 1)) for p in range(z_order + 1)],
            z_order,
        )
        acc = (acc * geom).truncate(z_order)
    return _biv_lift_z(acc, z_order)


def a_symbolic_matrix(z_order: int, u_order: int, cutoff: int):
    """Matrix elements of A(z, uz) as bivariate series (z outer, u inner).

    Returns dict {(lam_in, lam_out): Series-over-Series}.  Entries are exact
    on the energy window; states leaving the window are dropped.
    """
    from .partitions import enumerate_partitions

    basis = [()] + [
        lam for d in range(1, cutoff + 1) for lam in enumerate_partitions(d)
    ]
    zwork = z_order + cutoff + 2
    zx = zeta_series(zwork + u_order + 6)
    # prefactor exp(z log(zeta(uz)/uz))
    log_unit = Series(0, zx.coeffs, zx.order - 1).log()  # log(zeta(x)/x)
    pref = _biv_from_x(log_unit, zwork).shift(1).exp()
    entries: dict[tuple, Series] = {}

    def accumulate(lin, lout, biv):
        key = (lin, lout)
        cur = entries.get(key)
        entries[key] = biv if cur is None else cur + biv

    zeta_biv = _biv_from_x(zx, zwork)
    inv_zeta_biv = zeta_biv.reciprocal(zwork)
    kmax = min(cutoff, u_order + cutoff)
    zpows = {0: Series.const(Series.const(Fraction(1), None), zwork)}
    for k in range(1, kmax + 1):
        zpows[k] = (zpows[k - 1] * zeta_biv).truncate(zwork)
    for k in range(-1, -cutoff - 1, -1):
        zpows[k] = (zpows[k + 1] * inv_zeta_biv).truncate(zwork)
    for k in range(-cutoff, kmax + 1):
        if k >= 0:
            coeff_k = zpows[k] * _inv_pochhammer_z(k, zwork)
        else:
            coeff_k = zpows[k] * _falling_poly_z(-k, zwork)
        for lam in basis:
            if k == 0:
                diag = _biv_from_x(_diagonal_e0_x(lam, zwork + 4), zwork)
                accumulate(lam, lam, coeff_k * diag)
                continue
            depth = len(lam) + abs(k) + 2
            for jh in _occ_window(lam, depth):
                res = e_move(lam, jh, jh - 2 * k)
                if res is None:
                    continue
                nu, sign = res
                if energy(nu) > cutoff:
                    continue
                rate = Fraction(jh - k, 2)
                weight = _biv_from_x(_exp_rate_series(rate, zwork + 4), zwork)
                accumulate(lam, nu, coeff_k * weight * sign)
    out = {}
    for key, biv in entries.items():
        out[key] = (biv * pref).truncate(z_order)
    return out


def a_k_operators(matrix, ks, u_order: int):
    """Extract the z^k coefficient operators from the symbolic matrix.

    Returns {k: {lam_in: {lam_out: u-Series}}}.
    """
    out = {k: {} for k in ks}
    for (lin, lout), biv in matrix.items():
        for k in ks:
            if biv.order is not None and k > biv.order:
                raise ValueError("z-order too small for the requested extraction")
            c = biv.coeff(k)
            if isinstance(c, (int, Fraction)):
                continue
            c = c.truncate(u_order)
            if not c.is_zero():
                out[k].setdefault(lin, {})[lout] = c
    return out


def _op_apply(op, vec: dict, u_order: int) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        row = op.get(lam)
        if not row:
            continue
        for nu, w in row.items():
            cur = out.get(nu)
            val = (c * w).truncate(u_order)
            out[nu] = val if cur is None else cur + val
    return {k: v for k, v in out.items() if not v.is_zero()}


def a_commutator_check(
    k: int,
    l: int,
    z_order: int = 5,
    u_order: int = 3,
    cutoff: int = 6,
    test_states=((), (1,), (2, 1), (3, 1, 1)),
) -> dict:
    """Check [A_k, A_l] = (-1)^l delta_{k+l-1} on test states, coefficientwise
    in u, at two cutoffs.  Reports pass / fail / inconclusive."""

    def run(cut):
        # compose with u-headroom: products against Laurent entries lose
        # validity, so extract deeper than the comparison window
        u_work = u_order + cut + 2
        matrix = a_symbolic_matrix(z_order, u_order, cut)
        ops = a_k_operators(matrix, [k, l], u_work)
        results = {}
        for lam in test_states:
            if energy(lam) > cut:
                continue
            vec = {tuple(lam): Series.const(Fraction(1), u_work)}
            ab = _op_apply(ops[k], _op_apply(ops[l], vec, u_work), u_work)
            ba = _op_apply(ops[l], _op_apply(ops[k], vec, u_work), u_work)
            comm = dict(ab)
            for nu, c in ba.items():
                comm[nu] = comm.get(nu, Series.zero(u_work)) - c
            comm = {nu: c for nu, c in comm.items() if not (hasattr(c, "is_zero") and c.is_zero())}
            results[tuple(lam)] = comm
        return results

    first = run(cutoff)
    second = run(cutoff + 2)
    expected_scalar = Fraction((-1) ** l) if k + l == 1 else Fraction(0)
    # dropped intermediate states leave artifacts on a top energy band whose
    # depth grows with the operator indices; components below the band must
    # be stable across cutoffs and equal the expected multiple of the identity
    band = cutoff - max(abs(k), abs(l)) - 1
    report = {"k": k, "l": l, "expected": expected_scalar, "states": {}, "status": "pass"}

    def bump(status):
        order = {"pass": 0, "inconclusive": 1, "fail": 2}
        if order[status] > order[report["status"]]:
            report["status"] = status

    for lam in first:
        if lam not in second or energy(lam) > band:
            report["states"][lam] = "inconclusive"
            bump("inconclusive")
            continue
        a, b = first[lam], second[lam]
        verdict = "pass"
        for nu in set(a) | set(b):
            if energy(nu) > band:
                continue  # edge artifact zone
            ca = a.get(nu, Series.zero(u_order))
            cb = b.get(nu, Series.zero(u_order))
            lo = min(ca.low if not ca.is_zero() else 0, cb.low if not cb.is_zero() else 0)
            for q in range(lo, u_order + 1):
                if ca.coeff(q) != cb.coeff(q):
                    verdict = "inconclusive"
                    break
                want = expected_scalar if (nu == lam and q == 0) else Fraction(0)
                if ca.coeff(q) != want:
                    verdict = "fail"
                    break
            if verdict != "pass":
                break
        if verdict == "pass" and expected_scalar != 0:
            got = a.get(lam)
            if got is None or got.coeff(0) != expected_scalar:
                verdict = "fail"
        report["states"][lam] = verdict
        bump(verdict)
    return report


def a_commutator_suite(
    kmax: int = 3,
    z_order: int = 4,
    u_order: int = 2,
    cutoff: int = 7,
    test_states=((), (1,), (2, 1)),
) -> dict:
    """Check [A_k, A_l] for all |k|, |l| <= kmax, sharing the two matrix
    builds across pairs.  Returns {(k, l): status}."""
    ks = list(range(-kmax, kmax + 1))

    def run_all(cut):
        u_work = u_order + cut + 2
        matrix = a_symbolic_matrix(z_order, u_order, cut)
        ops = a_k_operators(matrix, ks, u_work)
        out = {}
        for k in ks:
            for l in ks:
                results = {}
                for lam in test_states:
                    if energy(lam) > cut:
                        continue
                    vec = {tuple(lam): Series.const(Fraction(1), u_work)}
                    ab = _op_apply(ops[k], _op_apply(ops[l], vec, u_work), u_work)
                    ba = _op_apply(ops[l], _op_apply(ops[k], vec, u_work), u_work)
                    comm = dict(ab)
                    for nu, c in ba.items():
                        comm[nu] = comm.get(nu, Series.zero(u_work)) - c
                    results[tuple(lam)] = {
                        nu: c for nu, c in comm.items() if not c.is_zero()
                    }
                out[(k, l)] = results
        return out

    first = run_all(cutoff)
    second = run_all(cutoff + 2)
    statuses = {}
    for k in ks:
        for l in ks:
            band = cutoff - max(abs(k), abs(l)) - 1
            expected = Fraction((-1) ** l) if k + l == 1 else Fraction(0)
            status = "pass"
            for lam, a in first[(k, l)].items():
                if energy(lam) > band:
                    status = "inconclusive"
                    continue
                b = second[(k, l)].get(lam, {})
                for nu in set(a) | set(b):
                    if energy(nu) > band:
                        continue
                    ca = a.get(nu, Series.zero(u_order))
                    cb = b.get(nu, Series.zero(u_order))
                    lo = min(
                        ca.low if not ca.is_zero() else 0,
                        cb.low if not cb.is_zero() else 0,
                    )
                    for q in range(lo, u_order + 1):
                        if ca.coeff(q) != cb.coeff(q):
                            status = "inconclusive"
                            break
                        want = expected if (nu == lam and q == 0) else Fraction(0)
                        if ca.coeff(q) != want:
                            status = "fail"
                            break
                    if status == "fail":
                        break
                if expected != 0 and status == "pass":
                    got = a.get(lam)
                    if got is None or got.coeff(0) != expected:
                        status = "fail"
                if status == "fail":
                    break
            statuses[(k, l)] = status
    return statuses


def a_vacuum_expectation_symbolic(z_order: int, u_order: int, cutoff: int) -> Series:
    """<A(z, uz)> as a bivariate series (z outer, u inner)."""
    matrix = a_symbolic_matrix(z_order, u_order, cutoff)
    got = matrix.get(((), ()))
    if got is None:
        return Series.zero(z_order)
    return got


__all__ = [
    "FockVector",
    "vacuum",
    "energy",
    "level_occupied",
    "e_move",
    "f2_eigenvalue",
    "maya_string",
    "alpha_apply",
    "f2_apply",
    "dim_path",
    "pair_exp_alpha1",
    "e_operator_apply",
    "vev_hurwitz",
    "apply_a_integer",
    "a_vev",
    "a_correlator",
    "a_connected",
    "connected_part",
    "a_polynomiality_check",
    "h_from_a_correlator",
    "a_symbolic_matrix",
    "a_k_operators",
    "a_commutator_check",
    "a_commutator_suite",
    "a_vacuum_expectation_symbolic",
    "TruncationUnstable",
]
