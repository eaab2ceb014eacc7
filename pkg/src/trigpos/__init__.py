"""Exact verification of positivity identities for binomial trigonometric sums.

Binomial coefficient cosine series are rewritten in powers of ``1 + cos x``
and the coefficients are compared with brute-force counts of bi-words.
"""

from .exact import Poly, binom, hyp2f1_terminating, pochhammer
from .sums import MultiParams, Params, WeightFamily
from .trig import CosSeries, expand_cos_series, expand_sine_series

__all__ = [
    "CosSeries",
    "MultiParams",
    "Params",
    "Poly",
    "WeightFamily",
    "binom",
    "expand_cos_series",
    "expand_sine_series",
    "hyp2f1_terminating",
    "pochhammer",
]
