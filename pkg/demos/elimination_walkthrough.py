"""Walk through the symbolic elimination that rules out large q.

For alpha = 2 mod 3 the coefficient sum S_q(alpha, a) collapses, once
q >= 2*alpha + 4, to an integer polynomial g_alpha evaluated at
y = a^(q(q+1)/3).  A permutation forces g_alpha(y) = 0 for every alpha
simultaneously, so common roots of the g's control which q can still occur:

  1. Res(g_2, g_5) factors over a handful of primes; any characteristic
     admitting a common root must divide it.
  2. Primes p = 1 mod 3 (and p = 3) are incompatible with q = 2 mod 3.
  3. For each survivor, gcd(g_2, g_5, g_8) mod p pins the candidate roots,
     and g_11 / g_14 evaluations kill them off.

Run:  python3 demos/elimination_walkthrough.py
"""

from permbinom.classify import elimination_pipeline
from permbinom.symalg import g_poly, poly_str

print("elimination polynomials")
for alpha in (2, 5, 8):
    rec = g_poly(alpha)
    s = poly_str(rec.g)
    if len(s) > 66:
        s = s[:63] + "..."
    print(f"  g_{alpha:<2} (degree {3 * alpha - 1:2d}, 3^{rec.d_alpha} cleared): {s}")
print("  (g_11 and g_14 are generated the same way)")
print()

report = elimination_pipeline()

fact = " * ".join(
    f"{p}^{m}" if m > 1 else str(p)
    for p, m in sorted(report.factorization.factors.items())
)
print(f"step 1: Res(g_2, g_5) = {report.resultant}")
print(f"        |Res| = {fact}")
print()
print("step 2: drop p = 3 and p = 1 mod 3 "
      f"-> surviving primes {list(report.surviving_primes)}")
print()
print("step 3: gcd chains")
for p, chain in report.chains.items():
    print(f"  p = {p}: gcd(g_2, g_5, g_8) = {poly_str(list(chain.gcd), 'x')} mod {p}")
    for (alpha, r), v in chain.evaluations.items():
        mark = "shared root survives" if v == 0 else "killed"
        print(f"      g_{alpha}({r}) = {v} mod {p}  [{mark}]")
    print(f"      -> {chain.conclusion}")
print()
print(f"q values that remain beyond the direct search: {list(report.candidate_qs)}")
print("each of those is covered by its sporadic family, verified by the sweep.")
