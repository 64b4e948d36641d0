"""Exact desk-scale models of partially ordered Jordan algebras and their cyclic orders."""

from .chart import Finite, GroupWord, Infinity, Jinv, Neg, Quad, TildeTrans, Trans
from .cyclic import Interval, in_R, is_cyclic_quadruple
from .jordan import Product, Scalar, Spin, Sym, dual_ext
from .rings import Q, rational

__all__ = [
    "Finite", "GroupWord", "Infinity", "Interval", "Jinv", "Neg", "Product", "Q", "Quad",
    "Scalar", "Spin", "Sym", "TildeTrans", "Trans", "dual_ext", "in_R", "is_cyclic_quadruple", "rational",
]
__version__ = "0.1.0"
