# The interval-set oracle for composition factors.
#
# Base-p digits of the diagonal weight c = a - b + 1 drive everything:
# admissible interval unions shift the diagram, the size filter keeps the
# shift inside the bottom row, and the shifted diagrams list the factors
# with multiplicity one.

from spechtres.dims import catalan
from spechtres.factors import (
    admissible_sets,
    composition_factors,
    delta,
    make_context,
    phi_bijection,
    simple_dim,
)
from spechtres.specht import Diagram2

for a, b, p in ((2, 2, 3), (3, 1, 3), (6, 4, 3), (10, 6, 5)):
    ctx = make_context(Diagram2(a, b), p)
    hat, filt = admissible_sets(ctx)
    print(f"[{a},{b}] at p={p}: c={ctx.c}, digits {ctx.digits}")
    for iset in filt:
        print(f"  {iset}: shift {delta(iset, ctx)} -> factor {ctx.tau.a + delta(iset, ctx), ctx.tau.b - delta(iset, ctx)}")
    dims = [simple_dim(p, f) for f in composition_factors(ctx)]
    print(f"  factor dims {dims} sum to the lattice dimension {catalan(ctx.tau.n, b)}")

print("\nstripping bijection for [4,0] at p=3 (shifted diagram [2,2]):")
rep = phi_bijection(make_context(Diagram2(4, 0), 3))
for pair in rep["pairs"]:
    print(f"  {pair['source']} <-> {pair['image']}  checks {pair['checks']}")
print("bijection audit ok:", rep["ok"])
