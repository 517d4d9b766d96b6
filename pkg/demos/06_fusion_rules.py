"""Fusion-rule upper bounds from finite exact linear systems.

The space of intertwining operators of type (F_nu; F_lam, F_mu) is 1 when
nu = lam + mu and 0 otherwise.  The windowed quotient-homomorphism system
reproduces exactly that, stabilized across two windows, for every momentum
triple tried.
"""

from fractions import Fraction

from voazhu.instances import fock, heisenberg_voa
from voazhu.intertwiner import fusion_report

V = heisenberg_voa()

print(" lam   mu   nu   dims(w6,w8)  stabilized")
for lam_s, mu_s in (("1", "2"), ("1/2", "1/2")):
    lam, mu = Fraction(lam_s), Fraction(mu_s)
    for delta in (0, 1, -1):
        nu = lam + mu + delta
        rep = fusion_report(V, fock(lam), fock(mu), fock(nu), 0, windows=(6, 8))
        print(f" {lam_s:>4} {mu_s:>4} {str(nu):>4}   {rep['dims']}    "
              f"{rep['stabilized']}")

print("\nthe vacuum channel: F_0 x F_lam -> F_lam carries exactly the module map")
rep = fusion_report(V, fock(0), fock("1/2"), fock("1/2"), 0, windows=(5, 6))
print("  dims:", rep["dims"], "stabilized:", rep["stabilized"])
