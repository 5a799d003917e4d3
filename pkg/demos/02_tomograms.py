"""Quadrature distributions (tomograms) of the damped oscillator.

A tomogram w(X, mu, nu, t) is the genuine probability density of measuring
the quadrature mu q + nu p; unlike the Wigner function it is nonnegative
and normalized in every frame.  This script evaluates the three analytic
families (ground-like, Fock, coherent), verifies normalization by
quadrature, and shows the scaling law |lambda| w(lambda X, lambda mu,
lambda nu) = w(X, mu, nu) inherited from the Radon kernel.

Run:  python demos/02_tomograms.py
"""

import numpy as np

from cktomo import (
    Coherent,
    Fock,
    TomographyFrame,
    make_params,
    normalization,
    optical_frame,
    tomogram,
)

params = make_params(0.05)
t = 5.0
mu, nu = optical_frame(0.9)  # homodyne frame at local-oscillator phase 0.9

print(f"damping gamma = {params.gamma}, time t = {t}, frame (mu, nu) = ({mu:.4f}, {nu:.4f})\n")

xs = np.linspace(-4.0, 4.0, 9)
states = [Fock(0), Fock(1), Fock(2), Coherent(1.0 + 0.5j)]
header = "     X    " + "".join(f"{str(s):>22s}" for s in states)
print(header)
for x in xs:
    frame = TomographyFrame(x, mu, nu)
    row = "".join(f"{tomogram(s, frame, t, params):22.12f}" for s in states)
    print(f"{x:8.2f}  {row}")

print("\nEvery family integrates to one in every frame:")
for s in states:
    print(f"  {str(s):24s}  int w dX = {normalization(s, mu, nu, t, params):.12f}")

print("\nHomogeneity |lam| w(lam X, lam mu, lam nu) = w(X, mu, nu):")
x = 0.8
for lam in (-2.0, 0.5, 3.0):
    w1 = tomogram(Fock(1), TomographyFrame(x, mu, nu), t, params)
    w2 = abs(lam) * tomogram(
        Fock(1), TomographyFrame(lam * x, lam * mu, lam * nu), t, params
    )
    print(f"  lambda = {lam:5.1f}:  |difference| = {abs(w1 - w2):.2e}")
