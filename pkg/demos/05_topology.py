"""Probing the interval topology.

Intervals cannot tell apart two tangent vectors over one base point, while
]-e, e[ in Sym(2, Q) is exactly the open spectral unit ball.
"""

from jordanorder import Scalar
from jordanorder.reports import SampleSpec
from jordanorder.rings import Q, rational
from jordanorder.topology import spectral_ball_check, sturm_count, tangent_fiber_inseparability

spec = SampleSpec(6, 200, 10)
print(tangent_fiber_inseparability(Scalar(Q), spec).to_text())
print(spectral_ball_check(2, spec).to_text())

# (t - 1)^2 (t + 2), coefficients lowest degree first
p = [rational(x) for x in (2, -3, 0, 1)]
print("distinct real roots:", sturm_count(p), " in (0, 1]:", sturm_count(p, rational(0), rational(1)))
