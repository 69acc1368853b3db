"""Tour of the zeta family: quotients, continuations, functional equations.

Run:  python demos/02_zeta_family.py
"""

import math

from liouville_mellin import (functional_eq_rhs_zeta_a,
                              functional_eq_rhs_zeta_alpha, gamma, zeta,
                              zeta_alpha, zeta_alternating, zeta_beta,
                              zeta_imp, zeta_lambda, zeta_mu, zeta_nu)

PI = math.pi

print("classical anchors:")
print(f"  zeta(2)      = {zeta(2.0).real:.12f}   (pi^2/6 = {PI**2/6:.12f})")
print(f"  zeta(-1)     = {zeta(-1.0).real:.12f}   (continued through the functional equation)")
print(f"  |zeta(-2)|   = {abs(zeta(-2.0)):.2e}   (trivial zero)")
print(f"  eta(1)       = {zeta_alternating(1.0).real:.12f}   (ln 2 = {math.log(2):.12f})")

print("\nthe derived quotients at s = 2:")
print(f"  zeta_imp(2)    = {zeta_imp(2.0).real:.12f}   (pi^2/8)")
print(f"  zeta_lambda(2) = {zeta_lambda(2.0).real:.12f}   (pi^2/15)")
print(f"  zeta_mu(2)     = {zeta_mu(2.0).real:.12f}   (6/pi^2)")
print(f"  zeta_alpha(2)  = {zeta_alpha(2.0).real:.12f}   (7 pi^2/60)")
print(f"  zeta_beta(2)   = {zeta_beta(2.0).real:.12f}   (7 zeta(3)/pi^2)")
print(f"  zeta_nu(1)     = {zeta_nu(1.0).real:.12f}")

# zeta_lambda continues meromorphically into the strip through zeta(2s)/zeta(s);
# the whole package exists to represent it there by an integral.
print("\nzeta_lambda on the strip -3/2 < Re s < -1/2:")
for s in (-0.75, -1.0, -1.25, complex(-0.75, 0.5)):
    print(f"  zeta_lambda({s}) = {zeta_lambda(complex(s)):.10f}")

# Functional equations, evaluated from both sides independently.
print("\nfunctional equations (lhs vs rhs):")
s = -0.6
print(f"  eta({s}):        {zeta_imp(1-s).real:.6f}-route rhs = "
      f"{functional_eq_rhs_zeta_a(s).real:+.12f}, lhs = "
      f"{((1 - 2.0**(1 - s)) * zeta(s)).real:+.12f}")
for s in (-0.75, -1.25):
    lhs = zeta_alpha(s)
    rhs = functional_eq_rhs_zeta_alpha(s)
    print(f"  alpha/beta at s={s}: lhs = {lhs.real:+.12f}, rhs = {rhs.real:+.12f}, "
          f"rel err = {abs(lhs-rhs)/abs(lhs):.2e}")

# The reflection built into `zeta` is self-consistent inside the critical strip.
s = complex(0.3, 2.0)
direct = zeta(s)
import cmath
reflected = (2.0**s * PI**(s-1) * cmath.sin(PI*s/2) * gamma(1-s) * zeta(1-s))
print(f"\nreflection self-check at s={s}: |direct - reflected| = "
      f"{abs(direct - reflected):.2e}")
