"""Exact constants for one (gamma, N) and how they fit together."""

from quasiradial.spectrum import check_invariants, make_spectrum, solve_k_roots

spec = make_spectrum("7/5", 2)
lo, hi = solve_k_roots("7/5", 2)
print(f"characteristic roots at gamma=7/5, N=2: {lo} and {hi}; k is the larger one")
print(f"k={spec.k}  lambda={spec.lam}  mu={spec.mu}  period=2pi*{spec.t_rat}")
print(f"apex z0={spec.z0:.12f}  quasialgebraic alpha={spec.alpha}  conjugate k*={spec.k_conj}")

# k rational <=> D square; 5/3 with N = 2 gives an irrational k
irr = make_spectrum("5/3", 2)
print(f"\ngamma=5/3, N=2: k = {irr.k} ~ {float(irr.k):.15f}")

print("\nall identities hold exactly:")
for name, ok in check_invariants(irr).items():
    print(f"  {name:<20} {ok}")

neg = make_spectrum("-7/5", 2)
print(f"\nsign flip: mu(-7/5)={neg.mu}, k(-7/5)={neg.k}, and k*(-7/5)={neg.k_conj} = k(7/5)")
