"""Evaluate an N-solution in the plane and check it against the PDE."""

import math

from quasiradial.field import (
    FieldConfig,
    PlanePoint,
    aronsson_config,
    conjugacy_check,
    eval_u,
    gradient,
    pde_residual,
    residual_grid,
)

config = FieldConfig.build("7/5", 2)
print("gamma=7/5, N=2 (u grows like rho^k with k=3/2)")
for theta in (0.0, math.pi / 8, math.pi / 4, math.pi / 2):
    pt = PlanePoint.polar(1.0, theta)
    ux, uy = gradient(config, pt)
    print(f"  theta={theta:.4f}: u={eval_u(config, pt):+.6e}  grad=({ux:+.4e}, {uy:+.4e})")

report = residual_grid(config)
print(f"  PDE residual over 20x20 annulus: max {report['max_residual']:.2e}")

# a wrong exponent is caught at once
bad = config.with_(k_offset=1e-3)
print(f"  with k off by 1e-3: residual {pde_residual(bad, PlanePoint(1.0, 0.3)):.2e}")

print("\ngamma=1, N=2 is the Aronsson solution x^{4/3} - y^{4/3}")
aron = aronsson_config()
for x, y in ((1.0, 0.0), (0.5, 1.5), (2.0, 1.0)):
    print(f"  u({x}, {y}) = {eval_u(aron, PlanePoint(x, y)):+.12f}  vs  {x ** (4 / 3) - y ** (4 / 3):+.12f}")

print("\nconjugate pair: u for 7/5 against the adjoint for -7/5")
conj = conjugacy_check(config)
print(f"  grad u . grad U* (normalized): {conj['max_orthogonality']:.1e}")
print(f"  |grad U*| / |grad u|^6 is constant: {conj['ratio_constant']:.6g} (spread {conj['ratio_spread']:.1e})")
