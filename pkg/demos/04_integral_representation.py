"""The headline: zeta_lambda on the strip equals a prefactored kernel integral.

Both sides are computed by completely different routes:
  lhs: zeta(2s)/zeta(s), continued by the functional equation;
  rhs: (1-2^(1-s))/(1-2^(1-2s)) * phi(s) * integral_0^inf kernel(x) x^(s-1/2) dx,
where phi collects the cosine/Gamma prefactor and the kernel is evaluated
from the sieve tables.  The integral is run twice, once per kernel route.

Run:  python demos/04_integral_representation.py        (~15 s)
"""

import time

from liouville_mellin import build_table, verify_theorem2
from liouville_mellin.verify import default_theorem2_spec

LIMIT = 400_001
print(f"sieving to {LIMIT} ...")
table = build_table(LIMIT)

grid = [complex(-0.75), complex(-1.25), complex(-1.0, 0.5), complex(-0.75, 1.0)]
print(f"comparing the two sides at {len(grid)} strip points, both kernel routes:\n")

t0 = time.time()
reports = verify_theorem2(table, spec=default_theorem2_spec(table), s_grid=grid)
for r in reports:
    route = "partial-fraction" if r.check_id.endswith("n-form") else "exponential"
    print(f"  s={r.inputs['s']:<12} {route:<16} lhs={r.lhs:.8f}")
    print(f"    {'':<12} {'':<16} rhs={r.rhs:.8f}   rel err {r.rel_err:.2e} "
          f"{'PASS' if r.passed else 'FAIL'}")
print(f"\n{sum(r.passed for r in reports)}/{len(reports)} checks passed "
      f"in {time.time()-t0:.1f}s")
print("tail beyond the trusted range is controlled by the empirical decay "
      "envelope; its bound rides in each report's budget.")
