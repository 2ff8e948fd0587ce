"""Hodge integrals from the quantized loop-group action, and the full chain.

The Bernoulli exponential acts on the psi-class potential and produces the
generating function of integrals of 1 - lambda_1 + ... +- lambda_g.  The
same series also falls out of the Lambert curve in its root coordinate;
and the coefficients of the fitted Hurwitz polynomials are exactly these
integrals, which is the content of the classical formula connecting the
two worlds.
"""

from itertools import product

from hurwitzlab.hodge import hodge_integral, r_from_curve, r_hodge, wk_correlator
from hurwitzlab.hurwitz import fit_P_polynomial

print("psi-class correlators from the Virasoro-style recursion:")
for g, ds in [(0, (0, 0, 0)), (1, (1,)), (2, (4,)), (2, (3, 2))]:
    print(f"  <tau_{ds}>_{g} = {wk_correlator(g, ds)}")

print()
print("the loop-group element, two ways (curve chart vs Bernoulli series):")
a, b = r_from_curve(5), r_hodge(5)
for k in range(1, 6):
    print(f"  z^{k}: {a.coeff(k)} == {b.coeff(k)}  {a.coeff(k) == b.coeff(k)}")

print()
print("signed Hodge integrals on one-pointed genus-2 space:")
for k in range(0, 5):
    print(f"  coefficient of psi^{k}: {hodge_integral(2, (k,))}")

print()
print("the headline identity: fitted Hurwitz coefficients are Hodge integrals")
for g, n in [(1, 1), (1, 2), (2, 1)]:
    fit = fit_P_polynomial(g, n)
    deg = 3 * g - 3 + n
    ok = all(
        fit.poly.coeff(e) == hodge_integral(g, e)
        for e in product(range(deg + 1), repeat=n)
        if sum(e) <= deg
    )
    print(f"  (g,n)=({g},{n}): all coefficients match: {ok}")
