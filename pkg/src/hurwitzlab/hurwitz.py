"""Simple Hurwitz numbers by independent routes.

Routes implemented here:

* character sums over irreducible symmetric-group characters,
* the cut-and-join evolution in the number of transpositions,
* direct monodromy counting with an orbit-tracking dynamic program
  (transitivity enforced structurally, no inclusion-exclusion).

Conventions: the disconnected number at degree d and cycle type mu counts
b-tuples of transpositions whose product lies in the class of mu, weighted
by |Aut(mu)|/d!; equivalently it is the factorization count of one fixed
permutation divided by prod(mu_i).  Connected numbers carry genus
g >= 0 with b = 2g + |mu| + len(mu) - 2 branch points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod

from .multipoly import MultiPoly
from .partitions import (
    Partition,
    central_character_f2,
    check_partition,
    dim_hook,
    enumerate_partitions,
    mn_character,
    z_aut,
)
from .rationals import rational_from_str, rational_to_str


class ConflictError(Exception):
    """Two routes produced different values for the same index."""


class ResourceGuardError(Exception):
    pass


class PolynomialityError(Exception):
    """A holdout point contradicted the interpolated polynomial."""


def branch_count(g: int, mu) -> int:
    """b = 2g + |mu| + len(mu) - 2."""
    mu = check_partition(mu)
    return 2 * g + sum(mu) + len(mu) - 2


# -- character route -----------------------------------------------------------


@lru_cache(maxsize=None)
def _lam_data(d: int):
    lams = enumerate_partitions(d)
    dims = [dim_hook(l) for l in lams]
    # f2 is always an integer
    f2s = [int(central_character_f2(l)) for l in lams]
    return lams, dims, f2s


@lru_cache(maxsize=None)
def _char_vector(mu: Partition):
    lams, _, _ = _lam_data(sum(mu))
    return tuple(mn_character(l, mu) for l in lams)


@lru_cache(maxsize=None)
def disconnected_by_b(mu: Partition, b: int) -> Fraction:
    """Disconnected Hurwitz number indexed by (mu, number of transpositions)."""
    mu = check_partition(mu)
    d = sum(mu)
    if d == 0:
        return Fraction(1 if b == 0 else 0)
    _, dims, f2s = _lam_data(d)
    chis = _char_vector(mu)
    total = 0
    for dim, f2, chi in zip(dims, f2s, chis):
        if chi and f2 == 0:
            total += dim * chi if b == 0 else 0
        elif chi:
            total += dim * chi * f2**b
    return Fraction(total, factorial(d) * prod(mu))


def h_disconnected_char(g: int, mu) -> Fraction:
    mu = check_partition(mu)
    return disconnected_by_b(mu, branch_count(g, mu))


# -- connected numbers via set-partition inclusion-exclusion --------------------


def set_partitions(items):
    """All set partitions of a list, each block a tuple in input order."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + ((first,) + block,) + part[i + 1 :]


@lru_cache(maxsize=None)
def h_connected(g: int, mu) -> Fraction:
    """Connected Hurwitz number h(g; mu), genus g >= 0."""
    mu = check_partition(mu)
    if g < 0:
        return Fraction(0)
    n = len(mu)
    b = branch_count(g, mu)
    if b < 0:
        return Fraction(0)
    total = h_disconnected_char(g, mu)
    for partn in set_partitions(range(n)):
        m = len(partn)
        if m < 2:
            continue
        blocks = [tuple(sorted((mu[i] for i in blk), reverse=True)) for blk in partn]
        # genus split: sum of (2 g_B - 2) over blocks equals 2g - 2
        gsum = g + m - 1
        for gs in product(range(gsum + 1), repeat=m):
            if sum(gs) != gsum:
                continue
            term = Fraction(1)
            bs = []
            for blk, gB in zip(blocks, gs):
                hB = h_connected(gB, blk)
                if not hB:
                    term = Fraction(0)
                    break
                bs.append(branch_count(gB, blk))
                term *= hB
            if term:
                # the b branch points distribute over components multinomially
                mult = Fraction(factorial(b), prod(factorial(x) for x in bs))
                total -= mult * term
    return total


def connected_from_disconnected(disc, index_set, grading):
    """Generic inclusion-exclusion over set partitions on u-graded series.

    ``disc`` maps frozensets of indices to series-like values supporting
    ``+``, ``-`` and ``*`` (Euler-characteristic additivity lives in the
    grading of the values).  Returns the connected value for ``index_set``.
    """
    index_set = tuple(index_set)
    memo = {}

    def conn(subset):
        if subset in memo:
            return memo[subset]
        val = disc[frozenset(subset)]
        for partn in set_partitions(list(subset)):
            if len(partn) < 2:
                continue
            term = grading
            for blk in partn:
                term = term * conn(tuple(sorted(blk)))
            val = val - term
        memo[subset] = val
        return val

    return conn(tuple(sorted(index_set)))


# -- cut-and-join evolution ------------------------------------------------------


def _cutjoin_moves(mu: Partition):
    """Transitions (nu, multiplier) for multiplying by one transposition."""
    mults: dict[int, int] = {}
    for a in mu:
        mults[a] = mults.get(a, 0) + 1
    moves = []

    def without(vals, *remove):
        pool = list(vals)
        for r in remove:
            pool.remove(r)
        return pool

    seen = sorted(mults)
    # join two parts a, b -> a+b
    for i, a in enumerate(seen):
        for bpart in seen[i:]:
            if a == bpart:
                m = mults[a]
                if m < 2:
                    continue
                count = (m * (m - 1) // 2) * a * a
                nu = tuple(sorted(without(mu, a, a) + [2 * a], reverse=True))
            else:
                count = mults[a] * mults[bpart] * a * bpart
                nu = tuple(sorted(without(mu, a, bpart) + [a + bpart], reverse=True))
            moves.append((nu, count))
    # cut one part c -> a + b
    for c in seen:
        for a in range(1, c // 2 + 1):
            bpart = c - a
            count = mults[c] * (c if a != bpart else c // 2)
            nu = tuple(sorted(without(mu, c) + [a, bpart], reverse=True))
            moves.append((nu, count))
    return moves


def cut_and_join_evolve(d_max: int = 10, b_max: int = 16):
    """Disconnected table {(mu, b): value} filled by the transposition recursion.

    Base case b=0: one (empty) factorization of the identity, i.e. value 1 at
    mu = (1,...,1) and 0 elsewhere.
    """
    if d_max > 10 or b_max > 16:
        raise ResourceGuardError("cut-and-join bounds exceeded")
    table: dict[tuple[Partition, int], Fraction] = {}
    for d in range(1, d_max + 1):
        types = enumerate_partitions(d)
        moves = {mu: _cutjoin_moves(mu) for mu in types}
        counts = {mu: 0 for mu in types}
        counts[(1,) * d] = 1
        for mu in types:
            table[(mu, 0)] = Fraction(counts[mu], prod(mu))
        for b in range(1, b_max + 1):
            nxt = {}
            for mu in types:
                nxt[mu] = sum(mult * counts[nu] for nu, mult in moves[mu])
            counts = nxt
            for mu in types:
                table[(mu, b)] = Fraction(counts[mu], prod(mu))
    return table


# -- monodromy counting with orbit tracking ---------------------------------------


def _cycle_type(perm) -> Partition:
    n = len(perm)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        out.append(ln)
    return tuple(sorted(out, reverse=True))


def _merge_blocks(partn, i, j):
    bi = bj = None
    for blk in partn:
        if i in blk:
            bi = blk
        if j in blk:
            bj = blk
    if bi is bj:
        return partn
    merged = tuple(sorted(bi + bj))
    rest = [blk for blk in partn if blk is not bi and blk is not bj]
    return tuple(sorted(rest + [merged]))


def h_bruteforce(g: int, mu) -> Fraction:
    """Connected Hurwitz number by explicit monodromy counting.

    Counts tuples of b transpositions with product in the class of mu whose
    generated group acts transitively (tracked via the orbit partition),
    then applies the |Aut(mu)|/d! normalization.
    """
    mu = check_partition(mu)
    d = sum(mu)
    b = branch_count(g, mu)
    if d > 7 or b > 8:
        raise ResourceGuardError(f"brute-force guard: |mu|={d}, b={b}")
    if b < 0:
        return Fraction(0)
    taus = list(combinations(range(d), 2))
    ident = tuple(range(d))
    singletons = tuple((i,) for i in range(d))
    states: dict[tuple, int] = {(ident, singletons): 1}
    for _ in range(b):
        nxt: dict[tuple, int] = {}
        for (perm, partn), cnt in states.items():
            for i, j in taus:
                newperm = list(perm)
                newperm[i], newperm[j] = perm[j], perm[i]
                # tau . perm as functions: swap the images i and j
                key = (tuple(newperm), _merge_blocks(partn, i, j))
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
    full = (tuple(range(d)),)
    total = sum(
        cnt
        for (perm, partn), cnt in states.items()
        if partn == full and _cycle_type(perm) == mu
    )
    _, aut = z_aut(mu)
    return Fraction(aut * total, factorial(d))


# -- the Hurwitz number cache with provenance --------------------------------------


@dataclass
class HurwitzTable:
    """Connected Hurwitz numbers keyed by (g, mu), with route provenance."""

    entries: dict = field(default_factory=dict)

    def insert(self, g: int, mu, value: Fraction, route: str):
        mu = check_partition(mu)
        key = (g, mu)
        if key in self.entries:
            old, routes = self.entries[key]
            if old != value:
                raise ConflictError(
                    f"conflicting values at (g={g}, mu={mu}): {old} [{routes}] vs {value} [{route}]"
                )
            routes.add(route)
        else:
            self.entries[key] = (Fraction(value), {route})

    def get(self, g: int, mu):
        mu = check_partition(mu)
        entry = self.entries.get((g, mu))
        return entry[0] if entry else None

    def value(self, g: int, mu) -> Fraction:
        """Fetch, computing via the character route (and caching) if absent."""
        mu = check_partition(mu)
        got = self.get(g, mu)
        if got is not None:
            return got
        val = h_connected(g, mu)
        self.insert(g, mu, val, "character")
        return val

    def to_json(self):
        rows = []
        for (g, mu), (val, routes) in sorted(self.entries.items()):
            rows.append(
                {
                    "g": g,
                    "mu": list(mu),
                    "b": branch_count(g, mu),
                    "value": rational_to_str(val),
                    "route": "+".join(sorted(routes)),
                }
            )
        return rows

    @staticmethod
    def from_json(rows) -> "HurwitzTable":
        table = HurwitzTable()
        for row in rows:
            for route in str(row["route"]).split("+"):
                table.insert(
                    int(row["g"]),
                    tuple(row["mu"]),
                    rational_from_str(row["value"]),
                    route,
                )
            if branch_count(int(row["g"]), tuple(row["mu"])) != int(row["b"]):
                raise ConflictError(f"inconsistent b field in row {row}")
        return table

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1, sort_keys=True)

    @staticmethod
    def load(path) -> "HurwitzTable":
        with open(path) as fh:
            text = fh.read().strip()
        if not text:
            return HurwitzTable()
        return HurwitzTable.from_json(json.loads(text))


# -- polynomial fits ------------------------------------------------------------------


@dataclass
class PPoly:
    """Fitted polynomial P with h(g; mu) = b! * prod(mu^mu/mu!) * P(mu)."""

    g: int
    n: int
    poly: MultiPoly
    report: dict


def hurwitz_scaled_value(g: int, mu) -> Fraction:
    """h(g; mu) divided by b! * prod(mu_i^mu_i / mu_i!)."""
    mu = check_partition(mu)
    b = branch_count(g, mu)
    scale = Fraction(factorial(b))
    for m in mu:
        scale *= Fraction(m**m, factorial(m))
    return h_connected(g, mu) / scale


def _lagrange_basis(s: int):
    """Coefficient lists of the Lagrange basis on nodes 1..s."""
    basis = []
    for i in range(1, s + 1):
        coeffs = [Fraction(1)]
        den = 1
        for j in range(1, s + 1):
            if j == i:
                continue
            new = [Fraction(0)] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                new[k + 1] += c
                new[k] -= j * c
            coeffs = new
            den *= i - j
        basis.append([c / den for c in coeffs])
    return basis


_FIT_CACHE: dict = {}


def fit_P_polynomial(g: int, n: int, grid_side=None, holdout: int = 2, value_fn=None) -> PPoly:
    """Interpolate P_{g,n} on an integer grid and verify it on holdout points.

    A holdout mismatch is disproof-grade and raises PolynomialityError.
    Degree-bound violations are recorded in the report, not hidden.
    """
    if (g, n) in ((0, 1), (0, 2)):
        raise ValueError("unstable (g, n) has no polynomial form")
    deg_bound = 3 * g - 3 + n
    if grid_side is None:
        grid_side = 3 * g - 2 + n + 1
    if grid_side < deg_bound + 1:
        raise ValueError("grid side too small for the degree bound")
    key = (g, n, grid_side, holdout, value_fn is None)
    if key in _FIT_CACHE:
        return _FIT_CACHE[key]
    if value_fn is None:
        value_fn = lambda mu: hurwitz_scaled_value(g, tuple(sorted(mu, reverse=True)))
    s = grid_side
    basis = _lagrange_basis(s)
    # tensor-product interpolation, one axis at a time
    vals = {pt: value_fn(pt) for pt in product(range(1, s + 1), repeat=n)}
    for ax in range(n):
        nxt = {}
        groups: dict[tuple, dict[int, Fraction]] = {}
        for pt, v in vals.items():
            rest = pt[:ax] + pt[ax + 1 :]
            groups.setdefault(rest, {})[pt[ax]] = v
        for rest, column in groups.items():
            coeffs = [Fraction(0)] * s
            for node, v in column.items():
                if not v:
                    continue
                for k, bc in enumerate(basis[node - 1]):
                    coeffs[k] += v * bc
            for k, c in enumerate(coeffs):
                if c:
                    nxt[rest[:ax] + (k,) + rest[ax:]] = c
        vals = nxt
    poly = MultiPoly(n, vals)
    report = {
        "grid_side": s,
        "per_var_degree": max((poly.degree(i) for i in range(n)), default=-1),
        "total_degree": poly.total_degree(),
        "degree_bound": deg_bound,
        "symmetric": poly.is_symmetric(),
        "per_var_degree_ok": all(poly.degree(i) <= deg_bound for i in range(n)),
        "total_degree_ok": poly.total_degree() <= deg_bound,
        "holdout_points": [],
    }
    for j in range(1, holdout + 1):
        pt = (s + j,) * n
        expected = value_fn(pt)
        got = poly.eval(pt)
        report["holdout_points"].append(
            {"point": list(pt), "value": rational_to_str(expected)}
        )
        if got != expected:
            raise PolynomialityError(
                f"fit for (g,n)=({g},{n}) fails at holdout {pt}: poly gives {got}, data gives {expected}"
            )
    report["holdout_ok"] = True
    result = PPoly(g, n, poly, report)
    _FIT_CACHE[key] = result
    return result


__all__ = [
    "ConflictError",
    "ResourceGuardError",
    "PolynomialityError",
    "branch_count",
    "disconnected_by_b",
    "h_disconnected_char",
    "h_connected",
    "h_bruteforce",
    "cut_and_join_evolve",
    "set_partitions",
    "connected_from_disconnected",
    "HurwitzTable",
    "PPoly",
    "hurwitz_scaled_value",
    "fit_P_polynomial",
]
