"""Which gamma = p/q have algebraic solutions?

Walks through the integer test on a few hand-picked gamma, the two extremal
series, and the family p = q^2 - 1 that sits just past the maximal series.
"""

from fractions import Fraction

from quasiradial.classifier import classify, discriminant, maximal_series, minimal_series

print("Algebraic N for a few gamma (D = N^2 p^2 - q^2 (2N - 1) must be a square):")
for g in ("7/5", "5/3", "2", "7/4", "13/8", "-7/5"):
    cls = classify(g)
    found = ", ".join(f"N={c.n} (k={c.k}, d={c.d}, {c.series})" for c in cls.certificates) or "none"
    print(f"  gamma={g:>5}  scanned N<={cls.n_bound:<3} -> {found}")

print("\nThe minimal series (2N+3)/(2N+1): exactly one algebraic N each")
for n in range(2, 7):
    g = minimal_series(n)
    print(f"  N={n}: gamma={g}, algebraic N = {classify(g.value).ns}")

print("\nThe maximal series, largest p for each denominator q")
for q in range(3, 9):
    g, n = maximal_series(q)
    print(f"  q={q}: gamma={g}, N={n}, D={discriminant(g, n)}")

print("\nOne step further: p = q^2 - 1 for odd q is also algebraic")
for q in (3, 5, 7):
    g, n = Fraction(q * q - 1, q), (q * q - 1) // 2
    print(f"  gamma={g}: N={n}, D={discriminant(g, n)} = {(n * g.numerator - 1)}^2")
