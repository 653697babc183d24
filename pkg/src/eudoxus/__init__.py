"""Exact real arithmetic on slopes.

A slope is a map ``Z -> Z`` whose additive defect is bounded; slopes up to
bounded difference are the real numbers.  Addition is pointwise, product is
composition, and every comparison or decimal rendering carries a certified
error bound.

>>> from eudoxus import Real, to_decimal
>>> to_decimal(Real.sqrt(2), 10).text
'1.4142135624'
"""

from .arith import add, int_power, inverse, multiply, negate, subtract
from .config import limits, override
from .constructors import (HomogenizedPolynomial, e_slope, from_integer, from_rational,
                           iroot, isqrt, lattice_count, pi_slope, poly_root, root_nat,
                           sqrt_nat)
from .errors import (CertificateViolation, InvalidBracketError, NonMonotoneError,
                     NotPositiveError, ResourceLimitError, SlopeError, ZeroDivisorError)
from .expr import eval_expr, parse, to_source
from .real import (CertifiedApprox, Comparison, Order, Real, Side, approximate,
                   archimedean_witness, cauchy_term, compare_within, dedekind_side,
                   sign_within, sup_finite, to_decimal)
from .slope import DefectCertificate, Slope, Trust, concentrate, defect_sample, opt_div

__version__ = '0.1.0'
