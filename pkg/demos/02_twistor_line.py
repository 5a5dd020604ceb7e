"""The twistor projective line: the real form of P^1 with no real points.

Its affine complement carries the algebra Q[u,v]/(u^2+v^2+1), embedded
into the complex Laurent field by solving u + iv = t, u - iv = -t^-1.
Cohomology is computed over Q (the "real" coefficients); the graded
pieces of the t-adic filtration show one real line in filtration 0 and a
complex line in each higher filtration step, and H^1(O(-1)) is the
quotient of the residue field by the global sections.
"""

from curvecoh import (
    build_section_ring,
    compute,
    degree_one_generation,
    graded_pieces,
    hilbert_function,
    twistor_presentation,
)

tw = twistor_presentation()

u, v = tw.embed_basis(1), tw.embed_basis(2)
print("embeddings solved from the complex linear system:")
print(f"  u        = {u}")
print(f"  v        = {v}")
print(f"  u^2+v^2  = {u * u + v * v}   (the defining relation)")

print()
print("cohomology over Q (real dimensions):")
print(f"{'n':>3}  {'h0':>3} {'h1':>3}  graded pieces")
for n in range(-4, 5):
    res = compute(tw, n)
    gr = ", ".join(f"gr_{m}={g0 + g1}" for m, (g0, g1) in graded_pieces(res).items())
    print(f"{n:>3}  {res.h0_dim:>3} {res.h1_dim:>3}  {gr or '-'}")

res = compute(tw, -1)
print()
print(f"H^1(O(-1)) is one-dimensional, the class of {res.h1_basis[0]}:")
print("  the residue field C modulo the global sections R.")

print()
print("the graded section ring is a quadric hypersurface:")
sr = build_section_ring(tw, 6)
print(f"  Hilbert function {hilbert_function(sr)}")
report = degree_one_generation(sr)
gens = report.kernel_generators[2][0]
print(f"  single degree-2 relation: {' + '.join(gens)} = 0")
print("  (three degree-1 generators, so P = R[x,y,z]/(one quadric))")
