"""Points beyond the chart: the Lagrangian model of Sym(2, Q).

The chart V + {infinity} misses points.  The full geometry holds them, and
the cyclic order there agrees with the chart wherever both are defined.
"""

from jordanorder import Sym
from jordanorder.geometry import check_chart_full_consistency, full_model
from jordanorder.cyclic import check_pco_axioms
from jordanorder.reports import SampleSpec

model = full_model(Sym(2))
spec = SampleSpec(3, 300, 10)
print(check_chart_full_consistency(Sym(2), spec).to_text())
print(check_pco_axioms(model, spec).to_text())
