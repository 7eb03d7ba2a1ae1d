"""Hyperbolic entropy measures and how they factor through projections.

A case-full hyperbolic distribution carries two ordinary probability vectors,
one per idempotent coordinate.  Every hyperbolic measure is then the pair of
real measures of those projections, which this script makes visible.
"""

import numpy as np

from hypentropy import (
    HyperbolicNumber,
    embed_real,
    extropy,
    extropy_duality_check,
    renyi_hyp,
    shannon,
    strong_extropy_hyp,
    strong_shannon_hyp,
    strong_shannon_via_generating,
    uniform_hyp,
    validate,
)

# ---------------------------------------------------------------------------
# A two-state hyperbolic distribution and its projections
# ---------------------------------------------------------------------------
B = validate([(0.5, 0.25), (0.5, 0.75)])
print("case:", B.case.value)
print("projection 1:", B.projection1().p)
print("projection 2:", B.projection2().p)

S = strong_shannon_hyp(B)
print("\nstrong hyperbolic Shannon entropy:", S)
print("real Shannon of projection 1:     ", shannon(B.projection1()))
print("real Shannon of projection 2:     ", shannon(B.projection2()))

# ---------------------------------------------------------------------------
# The generating-function rewrite: entropy as a derivative at -1
# ---------------------------------------------------------------------------
via = strong_shannon_via_generating(B)
print("\nvia d/dxi sum rho^(-xi) at -1_D:  ", via)
print("max componentwise drift:", max(abs(via.x1 - S.x1), abs(via.x2 - S.x2)))

# ---------------------------------------------------------------------------
# Renyi entropy of hyperbolic order: one order per coordinate
# ---------------------------------------------------------------------------
alpha = HyperbolicNumber(0.5, 2.0)
print("\nR_alpha with alpha = 0.5*e1 + 2*e2:", renyi_hyp(B, alpha))
print("uniform N=8 at any valid order:    ",
      renyi_hyp(uniform_hyp(8), alpha), "(= ln 8 per component)")

# ---------------------------------------------------------------------------
# Extropy: the complementary dual
# ---------------------------------------------------------------------------
J = strong_extropy_hyp(B)
print("\nstrong hyperbolic extropy:", J)
print("for N = 2 it coincides with the entropy:", S)

P = np.array([0.5, 0.25, 0.25])
from hypentropy import RealDistribution
res = extropy_duality_check(RealDistribution(P))
print("\nduality on (0.5, 0.25, 0.25):")
print("  J(P)                      =", res.lhs)
print("  sum_s S(p_s; 1-p_s) - S(P) =", res.rhs)
print("  extropy() agrees:         ", extropy(RealDistribution(P)))

# For three or more states the entropy dominates the extropy componentwise.
C = validate([(0.5, 0.2), (0.25, 0.3), (0.25, 0.5)])
print("\nN = 3 fixture: S_f =", strong_shannon_hyp(C))
print("               J_f =", strong_extropy_hyp(C))
print("embedded real line check:", embed_real(0.0).preceq(strong_shannon_hyp(C) - strong_extropy_hyp(C)))
