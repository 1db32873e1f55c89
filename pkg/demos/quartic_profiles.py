"""Bounded solutions of y'(xi)^2 = R(y) for a quartic R.

Builds the closed-form solution seeded at y(0) = y0 with slope sign sigma,
traces it over one sweep, and confirms with plain finite differences that
the traced curve actually solves the ODE.  Ends with a double-root curve
whose solution is an exact constant.
"""

import numpy as np

from cnlse_ansatz import (
    QuarticCurve,
    eval_with_derivatives,
    invariants_from_coefficients,
    weierstrass_solution,
)

# weighted coefficients: R(y) = a y^4 + 4b y^3 + 6c y^2 + 4d y + e
curve = QuarticCurve(-16.0, 8.0, -1.6, 0.13, 0.0)
inv = invariants_from_coefficients(curve)
print(f"curve invariants: g2 = {inv.g2:.6f}, g3 = {inv.g3:.6f}")

y0, sigma = 1.0, 1
r0 = eval_with_derivatives(curve, y0)[0]
print(f"R(y0) = {r0} > 0: real slope, bounded oscillation from y0 = {y0}\n")

xi = np.linspace(0.0, 2.0, 9)
y = weierstrass_solution(curve, y0, sigma, xi)
print("xi      y(xi)")
for a, b in zip(xi, y):
    print(f"{a:<6.3f}  {b:+.12f}")

# finite-difference check of (y')^2 = R(y) away from the endpoints
h = 1e-5
worst = 0.0
for x in np.linspace(0.1, 1.9, 25):
    stencil = x + h * np.array([-1.0, 1.0, -0.5, 0.5, 0.0])
    v = weierstrass_solution(curve, y0, sigma, stencil)
    slope = (4.0 * (v[3] - v[2]) / h - (v[1] - v[0]) / (2.0 * h)) / 3.0
    r = eval_with_derivatives(curve, float(v[4]))[0]
    worst = max(worst, abs(slope * slope - r) / max(1.0, abs(r)))
print(f"\nworst FD defect of (y')^2 = R(y): {worst:.3g}")

# both slope signs land on the same trajectory up to xi -> -xi
y_minus = weierstrass_solution(curve, y0, -1, -xi)
print(f"branch symmetry max |y_+(xi) - y_-(-xi)|: {np.max(np.abs(y - y_minus)):.3g}")

# a double root at y0 pins the solution to the equilibrium level exactly
flat = QuarticCurve(-1.0, 0.5, -1.0 / 3.0, 0.5, -1.0)  # R = -(y-1)^2 (y^2+1)
y_eq = weierstrass_solution(flat, 1.0, 1, np.linspace(0.0, 3.0, 7))
print(f"equilibrium curve: max |y - 1| = {np.max(np.abs(y_eq - 1.0)):.3g}")
