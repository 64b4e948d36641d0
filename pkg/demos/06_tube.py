"""The map z -> -z^{-1} on the tube V + i(cone).

For Sym(n, Q) it preserves the tube and is an involution.  For a spin
factor the run is exploratory and only lists anomalies.
"""

from jordanorder import Spin, Sym
from jordanorder.reports import SampleSpec
from jordanorder.tube import tube_experiment

spec = SampleSpec(8, 200, 10)
for alg in (Sym(2), Sym(3), Spin(3)):
    rep = tube_experiment(alg, spec)
    print(rep.to_text())
    if rep.exploratory:
        print("findings:", len(rep.findings))
