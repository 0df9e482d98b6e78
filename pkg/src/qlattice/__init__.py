"""Exact arithmetic and verification tools for u_zeta(sl2), its HKL mapping class
group representations, and the Schroedinger representation of the Heisenberg group."""

from .arith import (
    CycContext,
    CycInt,
    CycRat,
    LaurentPoly,
    NotDivisible,
    context,
    cyc_inverse,
    divide_exact_h,
    divide_exact_h_zeta,
    gauss_sum,
    is_integral,
    is_unit,
    reduce_at_zeta,
)
from .kernels import BACKEND

__version__ = "0.1.0"
