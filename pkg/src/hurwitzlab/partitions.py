"""Integer partitions, symmetric-group characters, and the transposition
central character.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ``()``.  Characters are computed by recursive border-strip
removal (Murnaghan-Nakayama) with a global memo table.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

Partition = tuple[int, ...]


def check_partition(mu) -> Partition:
    mu = tuple(int(a) for a in mu)
    if any(a <= 0 for a in mu):
        raise ValueError(f"parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {mu}")
    return mu


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, reverse-lexicographically, each exactly once."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, maxpart: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for a in range(min(remaining, maxpart), 0, -1):
            rec(remaining - a, a, prefix + (a,))

    rec(n, n if n else 1, ())
    if n == 0:
        return [()]
    return out


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    out = [0] * lam[0]
    for a in lam:
        for j in range(a):
            out[j] += 1
    return tuple(out)


@lru_cache(maxsize=None)
def dim_hook(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    d, r = divmod(factorial(n), hooks)
    assert r == 0
    return d


def _border_strips(lam: Partition, size: int):
    """Yield (new_partition, height) for each removable border strip."""
    ell = len(lam)
    # a strip of the given size ending in row i is determined by i; walk rows
    for i in range(ell):
        # candidate strip occupies rows i..j; find j by the rim condition
        # new_i = lam[j] - (size - (consumed above)) ... use the classical
        # beta-set trick: occupied first-column hooks
        pass
    # beta-set formulation: mu obtained by moving a bead down by `size`
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    for i in range(ell):
        b = beta[i] - size
        if b < 0 or b in bset:
            continue
        newbeta = sorted((x if x != beta[i] else b) for x in beta)[::-1]
        height = sum(1 for x in beta if b < x < beta[i])
        newlam = tuple(
            nb - (ell - 1 - k) for k, nb in enumerate(newbeta)
        )
        newlam = tuple(a for a in newlam if a > 0)
        yield newlam, height


_MN_MEMO: dict[tuple[Partition, Partition], int] = {}


def mn_character(lam, mu) -> int:
    """Irreducible character chi^lam at class mu via border-strip removal."""
    lam = check_partition(lam) if lam else ()
    mu = check_partition(mu) if mu else ()
    if sum(lam) != sum(mu):
        raise ValueError("character requires |lam| = |mu|")
    return _mn(lam, tuple(sorted(mu, reverse=True)))


def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    val = _MN_MEMO.get(key)
    if val is not None:
        return val
    part, rest = mu[0], mu[1:]
    total = 0
    for newlam, height in _border_strips(lam, part):
        total += (-1) ** height * _mn(newlam, rest)
    _MN_MEMO[key] = total
    return total


def z_aut(mu) -> tuple[int, int]:
    """(z_mu, |Aut(mu)|) = (prod parts * prod mult!, prod mult!)."""
    mu = check_partition(mu)
    mults: dict[int, int] = {}
    for a in mu:
        mults[a] = mults.get(a, 0) + 1
    aut = prod(factorial(m) for m in mults.values())
    return prod(mu) * aut, aut


def central_character_f2(lam) -> Fraction:
    """Eigenvalue of the transposition operator: sum_i lam_i(lam_i-2i+1)/2."""
    lam = check_partition(lam) if lam else ()
    return Fraction(sum(a * (a - 2 * i - 1) for i, a in enumerate(lam)), 2)


def f2_from_central_character(lam) -> Fraction:
    """Independent route: f2 = chi(2,1^{n-2})/dim * C(n,2)."""
    lam = check_partition(lam) if lam else ()
    n = sum(lam)
    if n < 2:
        return Fraction(0)
    mu = (2,) + (1,) * (n - 2)
    return Fraction(mn_character(lam, mu) * comb(n, 2), dim_hook(lam))


def partition_to_json(mu) -> list[int]:
    return list(check_partition(mu))


__all__ = [
    "Partition",
    "check_partition",
    "enumerate_partitions",
    "conjugate",
    "dim_hook",
    "mn_character",
    "z_aut",
    "central_character_f2",
    "f2_from_central_character",
    "partition_to_json",
]
