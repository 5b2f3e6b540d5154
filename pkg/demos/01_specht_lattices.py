# Two-row Specht lattices inside the sign-word tensor lattice.
#
# A diagram [a, b] on n = a + b letters lives at diagonal weight
# c = a - b + 1.  Tabloids become basis words, polytabloids become signed
# word sums, and the standard polytabloids give a deterministic basis.

from spechtres.specht import (
    Diagram2,
    Tableau2,
    Tabloid2,
    gram_of_diagram,
    ordinary_character,
    polytabloid,
    specht_basis,
    standard_tableaux,
    tabloid_vector,
)
from spechtres.tensor import apply_sl2, inner_product

tau = Diagram2(2, 2)
print(f"diagram {tau}: n = {tau.n}, weight c = {tau.c}")

t = Tabloid2(4, frozenset({3, 4}))
print("tabloid with bottom row {3,4} ->", tabloid_vector(t))

tab = Tableau2((1, 3), (2, 4))
e_t = polytabloid(tab)
print("polytabloid of ((1,3),(2,4)) ->", e_t)
print("killed by lowering:", apply_sl2("F", e_t).is_zero())
print("squared norm = 2^(columns):", inner_product(e_t, e_t))

print("\nstandard tableaux of [2,2]:")
for s in standard_tableaux(tau):
    print("  top", s.top, "bottom", s.bottom)

basis = specht_basis(tau.n, tau.c)
print("basis size:", len(basis))
print("Gram matrix:\n", gram_of_diagram(tau))

print("\ncharacter table column at the transposition (1 2):")
for b in range(0, 3):
    d = Diagram2(4 - b, b)
    print(f"  chi[{d.a},{d.b}]((1 2)) =", ordinary_character(d, (2, 1, 3, 4)))
