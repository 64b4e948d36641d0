"""Interval images: a hyperbolic interval on the line and torus boxes.

Writes hyperbolic.svg and torus.svg into the current directory.
"""

from jordanorder import Finite, Scalar, rational
from jordanorder.geometry import full_model
from jordanorder.images import (
    GridSpec, classify_pair, cube_point, render_image, torus_algebra, torus_boxes, torus_grid_check,
)
from jordanorder.rings import Q, format_rational

S = Scalar(Q)
a, b = Finite(S.elem([rational(1)])), Finite(S.elem([rational(-1)]))
print("class of ]1,-1[:", classify_pair(a, b).name.lower())
render_image(S, a, b, GridSpec.parse("-3:3:30"), "hyperbolic.svg", None)

half = rational("1/2")
ta, tb = [half, half], [-half, -half]
boxes = torus_boxes(ta, tb)
for box in boxes:
    print(" x ".join(f"({format_rational(lo)}, {format_rational(hi)})" for lo, hi in box.sides))
print(torus_grid_check(ta, tb, steps=20).to_text())

model = full_model(torus_algebra(2))
render_image(model, cube_point(model.geo, ta), cube_point(model.geo, tb), GridSpec.parse("-1:1:20,-1:1:20"),
             "torus.svg", None, (0, 1), cube=True, boxes=boxes)
print("wrote hyperbolic.svg and torus.svg")
