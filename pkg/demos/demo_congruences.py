"""Run a few congruence checks by hand and show the report objects.

Covers the three prime-power sweeps, the supercongruence against the eta
oracle, a power identity, the two-branch wrapper congruence, and the
mod-p^2 counterexample scan.
"""

from cmforms.congruence import (
    find_mod_p2_counterexample,
    verify_bs_congruence,
    verify_cor_1_2,
    verify_superapery,
    verify_thm_1_4,
    verify_thm_1_8,
    verify_thm_1_9,
)

print("prime-power congruences at p = 13:")
for fn in (verify_thm_1_4, verify_thm_1_8, verify_thm_1_9):
    for r in (1, 2):
        rep = fn(13, r)
        print(f"  {rep.theorem_id} r={r}: {rep.lhs_reduced} = {rep.rhs_reduced} (mod {rep.modulus})"
              f" -> {'ok' if rep.passed else 'FAIL'}")

print()
print("supercongruence mod p^2 via the eta product:")
for p in (5, 13, 29, 97):
    rep = verify_superapery(p)
    print(f"  p={p}: A((p-1)/2) = {rep.lhs_reduced} (mod {rep.modulus}) -> {'ok' if rep.passed else 'FAIL'}")

print()
print("exact power identity (weight 3, p = 7, square):")
rep = verify_cor_1_2(3, 7, 2)
print(f"  {rep.lhs_reduced} == {rep.rhs_reduced} -> {'ok' if rep.passed else 'FAIL'}")

print()
print("two-branch wrapper congruence, both branches:")
for m_tag, p in ((2, 11), (2, 5), (3, 7), (4, 13)):
    rep, note = verify_bs_congruence(m_tag, 1, 2, p)
    branch = "residue" if note == "n/a" else f"non-residue (sign: {note})"
    print(f"  M={m_tag} p={p}: {branch} -> {'ok' if rep.passed else 'FAIL'}")

print()
print("the mod-p congruences really do fail mod p^2:")
for thm in ("thm1.4", "thm1.8"):
    w = find_mod_p2_counterexample(thm, 100)
    print(f"  {thm}: witness at p={w.p}: {w.lhs_reduced} != {w.rhs_reduced} (mod {w.modulus})")
