"""Generating functions for hook counts in 2- and 3-regular partitions.

Every producer returns a :class:`~hookbias.series.TruncatedSeries` whose
coefficient of ``q^n`` is the stated count. Denominators are always brought
to the form ``1 - q^m`` with ``m >= 1`` and applied with
:func:`~hookbias.series.mul_geometric`; signs live in the numerators.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .report import CheckReport
from .series import (
    Polynomial,
    TruncatedSeries,
    eval_at_one,
    exact_poly_div,
    gaussian_binomial,
    mul_geometric,
    pochhammer,
    positivity_scan,
    q_int,
)

__all__ = [
    "DegenerateDenominator",
    "GF_NAMES",
    "gf",
    "regular_partitions",
    "gf_b_t1",
    "gf_b_32",
    "gf_b_2i",
    "gf_diff_2k",
    "gf_diff_32_31",
    "diff_32_31_direct",
    "t_series",
    "s_series",
    "t_series_product",
    "s_series_product",
    "b2i_terms",
    "b2i_rational_part",
    "compute_At_Bt",
    "compute_Bt",
    "verify_At_Bt_identity",
    "POLY_A",
    "POLY_B",
    "POLY_C",
    "BRACKET_45",
    "BRACKET_67",
    "decompose_b24_b25",
    "decompose_b26_b27",
    "b24_b25_parts",
    "b26_b27_summands",
]


class DegenerateDenominator(ValueError):
    """A denominator ``1 - q^m`` with ``m <= 0`` came up."""


def _P(*coeffs: int) -> Polynomial:
    return Polynomial(coeffs)


def _poly(terms: dict[int, int]) -> Polynomial:
    return Polynomial.from_terms(terms)


def regular_partitions(t: int, N: int) -> TruncatedSeries:
    """``(q^t;q^t)_inf / (q;q)_inf``, the count of t-regular partitions."""
    s = TruncatedSeries.one(N)
    for r in range(1, t):
        s = s * pochhammer(r, t, invert=True, N=N)
    return s


def gf_b_t1(t: int, N: int) -> TruncatedSeries:
    """Hooks of length 1 in t-regular partitions."""
    if t < 2:
        raise ValueError("t must be at least 2")
    inner = (mul_geometric(TruncatedSeries.monomial(1, N), 1)
             - mul_geometric(TruncatedSeries.monomial(t, N), t))
    return regular_partitions(t, N) * inner


def gf_b_32(N: int) -> TruncatedSeries:
    """Hooks of length 2 in 3-regular partitions."""
    inner = (mul_geometric(TruncatedSeries.monomial(2, N), 1)
             + mul_geometric(TruncatedSeries.monomial(2, N), 2)
             - mul_geometric(TruncatedSeries.monomial(3, N, 2), 3))
    return regular_partitions(3, N) * inner


def diff_32_31_direct(N: int) -> TruncatedSeries:
    """``b_{3,2} - b_{3,1}`` as the difference of the two closed forms."""
    return gf_b_32(N) - gf_b_t1(3, N)


def t_series(N: int) -> TruncatedSeries:
    """Triplets (alpha, beta, gamma): parts 2 mod 3; 1 mod 3 and >= 7; parts in {6, 9}."""
    s = pochhammer(2, 3, invert=True, N=N) * pochhammer(7, 3, invert=True, N=N)
    return mul_geometric(mul_geometric(s, 6), 9)


def s_series(N: int) -> TruncatedSeries:
    """Same as :func:`t_series` with the second component's floor lowered to 4."""
    s = pochhammer(2, 3, invert=True, N=N) * pochhammer(4, 3, invert=True, N=N)
    return mul_geometric(mul_geometric(s, 6), 9)


def _quotient_form(lo: int, N: int) -> TruncatedSeries:
    # (q^12;q^3)_inf / ((1 - q^2) (q^lo;q)_inf)
    s = pochhammer(12, 3, N=N) * pochhammer(lo, 1, invert=True, N=N)
    return mul_geometric(s, 2)


def t_series_product(N: int) -> TruncatedSeries:
    return _quotient_form(5, N)


def s_series_product(N: int) -> TruncatedSeries:
    return _quotient_form(4, N)


def gf_diff_32_31(N: int) -> TruncatedSeries:
    """Factorised form: ``-q(1+q^2+q^4)(1+q^3+q^6)`` times (T-series minus q^3 S-series)."""
    prefactor = -(_P(1, 0, 1, 0, 1) * _P(1, 0, 0, 1, 0, 0, 1)).shift(1)
    bracket = t_series_product(N) - s_series_product(N).shift(3)
    return prefactor * bracket


def b2i_terms(i: int) -> list[tuple[Polynomial, int]]:
    """Expand the rational part of the b_{2,i} generating function into
    ``(numerator, m)`` pairs, each standing for ``numerator / (1 - q^m)``.

    The full generating function is ``(-q;q)_inf`` times the sum of these.
    """
    if i < 1:
        raise ValueError("i must be at least 1")
    terms = []
    for j in range((i + 1) // 2):
        outer = gaussian_binomial(i - j - 1, j, 2)
        for k in range(j + 1):
            m = 2 * i + 2 * k - 4 * j
            if m <= 0:
                raise DegenerateDenominator(f"B1 term i={i} j={j} k={k} gives m={m}")
            num = outer * gaussian_binomial(j, k, 2)
            terms.append((num.shift(i + k * k) * (-1) ** k, m))
    for j in range(i // 2):
        outer = gaussian_binomial(i - j - 2, j, 2)
        for k in range(j + 1):
            m = 2 * i + 2 * k - 4 * j - 2
            if m <= 0:
                raise DegenerateDenominator(f"B2 term i={i} j={j} k={k} gives m={m}")
            num = outer * gaussian_binomial(j, k, 2)
            terms.append((num.shift(3 * i - 4 * j - 3 + k * k + 2 * k) * (-1) ** k, m))
    return terms


def b2i_rational_part(i: int, N: int) -> TruncatedSeries:
    by_m: dict[int, Polynomial] = defaultdict(Polynomial)
    for num, m in b2i_terms(i):
        by_m[m] = by_m[m] + num
    total = TruncatedSeries.zero(N)
    for m in sorted(by_m):
        total = total + mul_geometric(by_m[m].to_series(N), m)
    return total


@lru_cache(maxsize=64)
def gf_b_2i(i: int, N: int) -> TruncatedSeries:
    """Hooks of length i in 2-regular (distinct-part) partitions."""
    return pochhammer(1, 1, N=N, sign=1) * b2i_rational_part(i, N)


def gf_diff_2k(k: int, N: int) -> TruncatedSeries:
    """``b_{2,k} - b_{2,k+1}``."""
    return gf_b_2i(k, N) - gf_b_2i(k + 1, N)


GF_NAMES = ("b_t1", "b_32", "diff_32_31", "b_2i", "t_series", "s_series", "diff_2k")


def gf(name: str, N: int, t: int | None = None, i: int | None = None,
       k: int | None = None) -> TruncatedSeries:
    """Dispatch by series name; raises ValueError on a missing parameter."""

    def need(value, label):
        if value is None:
            raise ValueError(f"series {name} needs --{label}")
        return value

    if name == "b_t1":
        return gf_b_t1(need(t, "t"), N)
    if name == "b_32":
        return gf_b_32(N)
    if name == "diff_32_31":
        return gf_diff_32_31(N)
    if name == "b_2i":
        return gf_b_2i(need(i, "i"), N)
    if name == "t_series":
        return t_series(N)
    if name == "s_series":
        return s_series(N)
    if name == "diff_2k":
        return gf_diff_2k(need(k, "k"), N)
    raise ValueError(f"unknown series {name!r}")


# ---------------------------------------------------------------------------
# Odd k: (1-q)/(-q;q)_inf * sum (b_{2,2t+1} - b_{2,2t+2}) q^n = A_t / B_t


@lru_cache(maxsize=32)
def compute_Bt(t: int) -> Polynomial:
    out = Polynomial([1])
    for i in range(2 * t + 2):
        out = out * q_int(2 * i + 2)
    return out


@lru_cache(maxsize=32)
def compute_At_Bt(t: int) -> tuple[Polynomial, Polynomial]:
    """Numerator and common denominator of the odd-k rational function.

    ``B_t`` is the product of ``1 + q + ... + q^(2i+1)`` for ``0 <= i <= 2t+1``.
    The four double sums each carry denominators ``1 + q + ... + q^(m-1)``
    which all divide ``B_t``, so ``A_t`` is a sum of exact quotients.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    Bt = compute_Bt(t)
    G = gaussian_binomial
    acc = Polynomial()

    def add(sign, outer, shift, j, k, extra, m):
        nonlocal acc
        num = (outer * G(j, k, 2)).shift(shift + k * k + extra)
        acc = acc + num * exact_poly_div(Bt, q_int(m)) * (sign * (-1) ** k)

    for j in range(t + 1):
        for k in range(j + 1):
            add(+1, G(2 * t - j, j, 2), 2 * t + 1, j, k, 0, 4 * t + 2 * k - 4 * j + 2)
    for j in range(t):
        for k in range(j + 1):
            add(+1, G(2 * t - 1 - j, j, 2), 6 * t - 4 * j, j, k, 2 * k, 4 * t + 2 * k - 4 * j)
    for j in range(t + 1):
        for k in range(j + 1):
            add(-1, G(2 * t - j + 1, j, 2), 2 * t + 2, j, k, 0, 4 * t + 2 * k - 4 * j + 4)
    for j in range(t + 1):
        for k in range(j + 1):
            add(-1, G(2 * t - j, j, 2), 6 * t - 4 * j + 3, j, k, 2 * k, 4 * t + 2 * k - 4 * j + 2)
    return acc, Bt


def verify_At_Bt_identity(t: int, N: int) -> CheckReport:
    """Check ``A_t (-q;q)_inf / (1-q) == B_t (b_{2,2t+1} - b_{2,2t+2})`` up to q^N."""
    A, B = compute_At_Bt(t)
    lhs = A * mul_geometric(pochhammer(1, 1, N=N, sign=1), 1)
    rhs = B * gf_diff_2k(2 * t + 1, N)
    report = CheckReport("at-bt-identity", {"t": t, "N": N}, (0, N), grade="theorem")
    for n in range(N + 1):
        if lhs[n] != rhs[n]:
            report.add_violation(n, lhs[n], rhs[n])
    report.add_witness(0, {"A_t(1)": eval_at_one(A), "B_t(1)": eval_at_one(B),
                           "deg A_t": A.degree, "deg B_t": B.degree})
    return report.finish()


# ---------------------------------------------------------------------------
# Even k = 4 and k = 6

POLY_A = _P(2, 1, 3, 3, 4, 4, 6, 7, 6, 7, 5, 6, 4, 4, 3, 3, 1)
POLY_B = _poly({18: 1, 20: 1})
POLY_C = _P(3, 1, 4, 2, 6, 3, 7, 5, 7, 6, 9, 9, 9, 9, 6, 9, 4, 7, 2, 6, 2, 4, 2, 3,
            0, 0, 0, 0, 1, 0, 1, 0, 1)

# Numerator of (b_{2,4} - b_{2,5}) over q^4 / ((1-q^8)(1-q^10)(q;q^2)_inf).
BRACKET_45 = _P(2, -3, 3, -2, 1, -1, 2, -1, -2, 2, -3, 3, -3, 2, -1, 1, -2, 1, 2, -1, 1, -1)

# Numerator of (b_{2,6} - b_{2,7}) over q^6 / ((1-q^12)(1-q^14)(q^3;q^2)_inf).
BRACKET_67 = _P(3, -2, 3, -2, 4, -3, 4, -2, 2, -1, 4, 0, -1, 0, -3, 3, -5, 3, -5, 4, -4,
                2, -2, 1, -4, 0, 1, 1, 1, -1, 2, -1, 1, -1)


def _over(numerator: TruncatedSeries, *geoms: int) -> TruncatedSeries:
    for m in geoms:
        numerator = mul_geometric(numerator, m)
    return numerator


def b24_b25_parts(N: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The A- and B-pieces of ``b_{2,4} - b_{2,5}``, each over ``(1-q^8)(1-q^10)(q;q^2)_inf``."""
    inv = pochhammer(1, 2, invert=True, N=N)
    one_minus_q = _P(1, -1)
    a_part = _over((POLY_A * one_minus_q ** 2).shift(4) * inv, 8, 10)
    b_part = _over((POLY_B * one_minus_q).shift(4) * inv, 8, 10)
    return a_part, b_part


def decompose_b24_b25(N: int) -> CheckReport:
    if N < 25:
        raise ValueError("N must be at least 25")
    report = CheckReport("decompose-b24-b25", {"N": N}, (0, N), grade="theorem")
    bracket = POLY_A * _P(1, -1) ** 2 + POLY_B * _P(1, -1)
    if bracket != BRACKET_45:
        report.add_violation(-1, str(bracket), str(BRACKET_45))
    a_part, b_part = b24_b25_parts(N)
    rhs = a_part + b_part
    lhs = gf_diff_2k(4, N)
    for n in range(N + 1):
        if lhs[n] != rhs[n]:
            report.add_violation(n, lhs[n], rhs[n])
    report.add_witness(5, {"b24-b25": lhs[5]})
    report.add_witness(-1, {"negative": positivity_scan(lhs)})
    return report.finish()


def b26_b27_summands(N: int) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    inv1 = pochhammer(1, 2, invert=True, N=N)
    inv3 = pochhammer(3, 2, invert=True, N=N)
    one_minus_q_sq = _P(1, -1) ** 2
    first = _over((POLY_C * one_minus_q_sq).shift(6) * inv1, 12, 14)
    second = _over((_P(1, 1) * one_minus_q_sq).shift(16) * inv1, 12)
    third = _over(_P(1, 0, 0, 1).shift(33) * inv3, 12, 14)
    return first, second, third


def decompose_b26_b27(N: int) -> CheckReport:
    if N < 55:
        raise ValueError("N must be at least 55")
    report = CheckReport("decompose-b26-b27", {"N": N}, (0, N), grade="theorem")
    q = Polynomial.monomial
    bracket = (POLY_C * _P(1, -1) + q(10) * (1 - q(14)) * (1 - q(2)) + q(27) + q(30))
    if bracket != BRACKET_67:
        report.add_violation(-1, str(bracket), str(BRACKET_67))
    # The bracket form itself, over q^6 / ((1-q^12)(1-q^14)(q^3;q^2)_inf).
    bracket_rhs = _over(BRACKET_67.shift(6) * pochhammer(3, 2, invert=True, N=N), 12, 14)
    parts = b26_b27_summands(N)
    rhs = parts[0] + parts[1] + parts[2]
    lhs = gf_diff_2k(6, N)
    for n in range(N + 1):
        if lhs[n] != rhs[n] or lhs[n] != bracket_rhs[n]:
            report.add_violation(n, lhs[n], rhs[n])
    thresholds = {}
    for idx, part in enumerate(parts, start=1):
        neg = positivity_scan(part)
        thresholds[f"summand{idx}"] = (max(neg) + 1) if neg else 0
    report.add_witness(7, {"b26-b27": lhs[7]})
    report.add_witness(-1, {"negative": positivity_scan(lhs), "nonneg-from": thresholds})
    return report.finish()
