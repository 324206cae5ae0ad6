"""The four binomial-sum sequences, their recurrences and wrapper forms.

Shows the exact values, fits a three-term recurrence where one exists, and
demonstrates why two of the sequences need the monic normalization instead.
"""

from cmforms import fit_monic_triple, fit_triple, sequence, u_m

for name in ("A", "B", "C", "D"):
    seq = sequence(name, 8)
    print(f"{name}(0..8) = {list(seq.terms)}")

print()
print("odd-support wrappers:")
for m_tag in (2, 3, 4):
    print(f"  U_{m_tag}(1..9) = {[u_m(m_tag, n) for n in range(1, 10)]}")

print()
print("recurrence fitting, b(n+1)^2 u(n+1) + (a n^2 + a n - lam) u(n) + n^2 u(n-1) = 0:")
for name in ("A", "B", "C", "D"):
    seq = sequence(name, 20)
    triple = fit_triple(seq)
    if triple is not None:
        print(f"  {name}: (a, b, lam) = ({triple.a}, {triple.b}, {triple.lam})")
    else:
        monic = fit_monic_triple(seq)
        if monic is not None:
            print(
                f"  {name}: no integral triple in this normalization;"
                f" monic form fits (a, b, lam) = ({monic.a}, {monic.b}, {monic.lam})"
            )
        else:
            print(f"  {name}: no integral three-term recurrence of either shape")
