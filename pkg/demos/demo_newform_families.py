"""Build the three coefficient families two independent ways and compare.

Walks through the constructions at small truncation so the numbers are easy
to eyeball: the ideal-sum expansion, the closed-form prime values extended by
the eigenform recursion, and (for the weight-3 Gaussian family) the eta
product.
"""

from cmforms import (
    Family,
    FamilyTag,
    HeckeCharSpec,
    Ring,
    eta_product_h,
    extend_coefficients,
    q_expansion_ideal_sum,
)

NMAX = 30

print("=== sqrt(-3) family, weight 3 ===")
spec = HeckeCharSpec.for_weight(Ring.EISEN, 3)
print(f"conductor case {spec.case.value}, level {spec.level}, character {spec.nebentypus_label}")
ideal = q_expansion_ideal_sum(spec, NMAX)
closed = extend_coefficients(FamilyTag(Family.GAMMA, 3), NMAX)
print("ideal sum  :", list(ideal.coeffs))
print("closed form:", list(closed.coeffs))
assert ideal.coeffs == closed.coeffs

print()
print("=== sqrt(-2) family, weight 3 ===")
spec = HeckeCharSpec.for_weight(Ring.SQRTM2, 3)
ideal = q_expansion_ideal_sum(spec, NMAX)
closed = extend_coefficients(FamilyTag(Family.BETA, 3), NMAX)
print("ideal sum  :", list(ideal.coeffs))
print("closed form:", list(closed.coeffs))
assert ideal.coeffs == closed.coeffs

print()
print("=== Z[i] family, weight 3, against the eta product ===")
h = eta_product_h(NMAX)
closed = extend_coefficients(FamilyTag(Family.ALPHA, 3), NMAX)
eta = [h[n] for n in range(1, NMAX + 1)]
print("eta product:", eta)
print("closed form:", list(closed.coeffs))
assert tuple(eta) == closed.coeffs

print()
print("all three oracle pairs agree through n =", NMAX)
