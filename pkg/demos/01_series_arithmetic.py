"""
Exact q-series arithmetic
=========================

Truncated power series with integer coefficients, infinite products and
Gaussian binomials.
"""

from hookbias import Polynomial, TruncatedSeries, gaussian_binomial, pochhammer

N = 20

# (q;q)_inf: the pentagonal numbers show up as the only nonzero coefficients
euler = pochhammer(1, 1, N=N)
print("(q;q)    :", list(euler))

# its reciprocal counts all partitions
p = pochhammer(1, 1, invert=True, N=N)
print("1/(q;q)  :", list(p))
print("product  :", euler * p == TruncatedSeries.one(N))

# (-q;q)_inf counts partitions into distinct parts
print("(-q;q)   :", list(pochhammer(1, 1, N=N, sign=1)))

# polynomials multiply into series and truncate on the way
print("(1-q)^2 * 1/(q;q^2):", list(Polynomial([1, -2, 1]) * pochhammer(1, 2, invert=True, N=N)))

# Gaussian binomial in base q^2
print("[4 choose 2] at q^2:", gaussian_binomial(4, 2, 2))
