"""The complex projective line, glued from C[t] and the formal disc at infinity.

Sections of O(n) regular away from infinity with pole order at most n
are spanned by 1, t, ..., t^n; the first cohomology is spanned by the
classes of t^-1, ..., t^(n+1) when n is negative. This script prints the
full table and the Euler characteristic, which is linear in n.
"""

from curvecoh import compute, euler_characteristic, graded_pieces, p1_presentation

p1 = p1_presentation()

print("line bundle cohomology of the complex projective line")
print(f"{'n':>3}  {'h0':>3} {'h1':>3}  basis / representatives")
for n in range(-5, 6):
    res = compute(p1, n)
    if res.h0_dim:
        detail = ", ".join(p1.element_label(v) for v in res.h0_basis)
    elif res.h1_dim:
        detail = ", ".join(str(w) for w in res.h1_basis)
    else:
        detail = "-"
    print(f"{n:>3}  {res.h0_dim:>3} {res.h1_dim:>3}  {detail}")

print()
print("graded pieces of the t-adic filtration (H^0, n = 3):")
for m, (g0, g1) in graded_pieces(compute(p1, 3)).items():
    print(f"  gr_{m}: dimension {g0}")

print()
print("Euler characteristic chi(O(n)) = n + 1:")
print(" ", [euler_characteristic(p1, n) for n in range(-4, 5)])
