# Dimension combinatorics: signed Catalan sums, Fibonacci identities,
# fusion-ring genus multiplicities, growth polynomials and Perron norms.

from spechtres.dims import (
    closed_form_genus_dims,
    d_dim,
    fib,
    fib_catalan_identities,
    fusion_label,
    growth_polynomial,
    perron_norms,
    perron_power_iteration,
    quantum_dim_identity,
    verlinde_profile,
)

print("simple quotient dims at p=5 are Fibonacci numbers:")
for n in range(1, 11):
    k = 2 if n % 2 else 3  # the (r+1, r) / (r+1, r-1) family labels
    print(f"  n={n:2d}: d = {d_dim(5, n, k):4d}   f_{n} = {fib(n)}")

print("\nfive-periodic alternating Catalan sums (r = 4):")
rep = fib_catalan_identities(4)
for name, entry in rep.items():
    if name != "ok":
        print(f"  {name}: {entry['value']} = {entry['fibonacci']}")

print("\nfusion ring at p=5: label products")
for i in range(1, 5):
    row = [(fusion_label(5, i) * fusion_label(5, j)).mults for j in range(1, 5)]
    print(f"  {{{i}}} * ...", row)

print("\ngenus multiplicities (powers of the per-handle element):")
for g in range(0, 6):
    print(f"  g={g}: fusion {verlinde_profile(5, g)}  closed forms {closed_form_genus_dims(g)}")

print("\ngrowth polynomials:")
for p in (5, 7, 9, 11, 13):
    print(f"  p={p}: {growth_polynomial(p)}")

for p in (5, 7, 11):
    big, small = perron_norms(p)
    ib, ismall = perron_power_iteration(p)
    print(f"p={p}: |F| = {big:.9f} (iterated {ib:.9f}), |f| = {small:.9f} (iterated {ismall:.9f}),",
          f"R_p(|f|) = {growth_polynomial(p)(small):.9f}")

print("\nquantum dimension identity at (p, n) = (7, 9):", quantum_dim_identity(7, 9)["ok"])
