"""Exact truncated power series and integer polynomials in one variable q.

Everything here is integer arithmetic on Python ints; nothing is ever
rounded. A :class:`TruncatedSeries` stores the coefficients of
``q^0 .. q^trunc`` and binary operations truncate to the smaller order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "NonzeroRemainder",
    "TruncatedSeries",
    "Polynomial",
    "series_add",
    "series_sub",
    "series_mul",
    "mul_geometric",
    "mul_binomial",
    "pochhammer",
    "gaussian_binomial",
    "gaussian_binomial_quotient",
    "exact_poly_div",
    "eval_at_one",
    "positivity_scan",
    "q_int",
]


class NonzeroRemainder(ArithmeticError):
    """Polynomial division that was expected to be exact left a remainder."""


# Below this many coefficients the schoolbook product beats packing.
_KRONECKER_MIN = 24


def _naive_mul(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Schoolbook Cauchy product, keeping indices ``0..n``."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: n + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def _pack(coeffs: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(c.to_bytes(width, "little") for c in coeffs), "little")


def _unpack(value: int, width: int, count: int) -> list[int]:
    value &= (1 << (8 * width * count)) - 1
    raw = value.to_bytes(width * count, "little")
    return [int.from_bytes(raw[k * width:(k + 1) * width], "little") for k in range(count)]


def _kronecker_mul(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Cauchy product by packing both operands into single big integers.

    Signs are split off first so that every packed slot is non-negative;
    the slot width leaves room for the sum of two full convolutions.
    """
    a = list(a[: n + 1])
    b = list(b[: n + 1])
    ma = max((abs(x) for x in a), default=0)
    mb = max((abs(x) for x in b), default=0)
    if not ma or not mb:
        return [0] * (n + 1)
    bound = 2 * min(len(a), len(b)) * ma * mb
    width = (bound.bit_length() + 8) // 8
    ap = [x if x > 0 else 0 for x in a]
    an = [-x if x < 0 else 0 for x in a]
    bp = [x if x > 0 else 0 for x in b]
    bn = [-x if x < 0 else 0 for x in b]
    Ap, An, Bp, Bn = (_pack(v, width) for v in (ap, an, bp, bn))
    count = min(n + 1, len(a) + len(b) - 1)
    plus = _unpack(Ap * Bp + An * Bn, width, count)
    minus = _unpack(Ap * Bn + An * Bp, width, count)
    out = [x - y for x, y in zip(plus, minus)]
    out.extend([0] * (n + 1 - count))
    return out


def _mul_lists(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _naive_mul(a, b, n)
    return _kronecker_mul(a, b, n)


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series known modulo ``q^(trunc+1)``."""

    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("trunc must be non-negative")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("need exactly trunc + 1 coefficients")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], trunc: int) -> "TruncatedSeries":
        """Build a series, padding with zeros or dropping terms past ``trunc``."""
        c = list(coeffs)[: trunc + 1]
        c.extend([0] * (trunc + 1 - len(c)))
        return cls(tuple(int(x) for x in c), trunc)

    @classmethod
    def zero(cls, trunc: int) -> "TruncatedSeries":
        return cls((0,) * (trunc + 1), trunc)

    @classmethod
    def one(cls, trunc: int) -> "TruncatedSeries":
        return cls.from_coeffs([1], trunc)

    @classmethod
    def monomial(cls, k: int, trunc: int, c: int = 1) -> "TruncatedSeries":
        if k > trunc:
            return cls.zero(trunc)
        return cls.from_coeffs([0] * k + [c], trunc)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return series_add(self, _coerce(other, self.trunc))

    __radd__ = __add__

    def __sub__(self, other):
        return series_sub(self, _coerce(other, self.trunc))

    def __rsub__(self, other):
        return series_sub(_coerce(other, self.trunc), self)

    def __neg__(self):
        return TruncatedSeries(tuple(-x for x in self.coeffs), self.trunc)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * x for x in self.coeffs), self.trunc)
        return series_mul(self, _coerce(other, self.trunc))

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q^k`` (k >= 0)."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return TruncatedSeries.from_coeffs([0] * k + list(self.coeffs), self.trunc)

    def truncate(self, trunc: int) -> "TruncatedSeries":
        if trunc > self.trunc:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: trunc + 1], trunc)


def _coerce(x, trunc: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, Polynomial):
        return x.to_series(trunc)
    if isinstance(x, int):
        return TruncatedSeries.from_coeffs([x], trunc)
    return NotImplemented


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.trunc, b.trunc)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])), n)


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.trunc, b.trunc)
    return TruncatedSeries(tuple(x - y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1])), n)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.trunc, b.trunc)
    return TruncatedSeries(tuple(_mul_lists(a.coeffs, b.coeffs, n)), n)


def _divide_by_binomial(c: list[int], k: int, sign: int) -> list[int]:
    # c / (1 - sign*q^k): out[n] = c[n] + sign*out[n-k], one stride block at a time.
    out = list(c)
    for start in range(k, len(out), k):
        prev = out[start - k:start]
        block = out[start:start + k]
        if sign > 0:
            out[start:start + k] = [x + y for x, y in zip(block, prev)]
        else:
            out[start:start + k] = [x - y for x, y in zip(block, prev)]
    return out


def _times_binomial(c: list[int], k: int, sign: int) -> list[int]:
    # c * (1 - sign*q^k)
    if k >= len(c):
        return list(c)
    head = c[:k]
    if sign > 0:
        return head + [x - y for x, y in zip(c[k:], c)]
    return head + [x + y for x, y in zip(c[k:], c)]


def mul_geometric(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Return ``a / (1 - q^k)``."""
    if k < 1:
        raise ValueError("k must be positive")
    return TruncatedSeries(tuple(_divide_by_binomial(list(a.coeffs), k, 1)), a.trunc)


def mul_binomial(a: TruncatedSeries, k: int, sign: int = -1) -> TruncatedSeries:
    """Return ``a * (1 + sign*q^k)``; the default is the factor ``1 - q^k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return a * (1 + sign)
    return TruncatedSeries(tuple(_times_binomial(list(a.coeffs), k, -sign)), a.trunc)


@lru_cache(maxsize=256)
def _pochhammer(start: int, step: int, invert: bool, N: int, sign: int) -> tuple[int, ...]:
    c = [0] * (N + 1)
    c[0] = 1
    for m in range(start, N + 1, step):
        if invert:
            # 1/(1 + sign*q^m)
            c = _divide_by_binomial(c, m, -sign)
        else:
            c = _times_binomial(c, m, -sign)
    return tuple(c)


def pochhammer(start: int, step: int, invert: bool = False, N: int = 100,
               sign: int = -1) -> TruncatedSeries:
    """Expand ``prod_{j>=0} (1 + sign*q^(start + j*step))``, or its reciprocal.

    ``pochhammer(1, 1, N=N)`` is ``(q;q)_inf`` and ``pochhammer(1, 1, sign=1)``
    is ``(-q;q)_inf``. Factors whose exponent exceeds ``N`` are exactly 1
    modulo ``q^(N+1)`` and are skipped.
    """
    if start < 1 or step < 1:
        raise ValueError("start and step must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return TruncatedSeries(_pochhammer(start, step, bool(invert), N, sign), N)


def positivity_scan(s: TruncatedSeries, start: int = 0, positive: bool = False) -> list[int]:
    """Indices ``n >= start`` whose coefficient is < 0 (or > 0 with ``positive``)."""
    if start > s.trunc:
        raise ValueError("start beyond truncation order")
    if positive:
        return [n for n in range(start, s.trunc + 1) if s.coeffs[n] > 0]
    return [n for n in range(start, s.trunc + 1) if s.coeffs[n] < 0]


class Polynomial:
    """Integer polynomial in q with trailing zeros stripped.

    The zero polynomial has ``coeffs == ()`` and ``degree is None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "Polynomial":
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, n):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c:
                mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
                mag = abs(c)
                body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
                terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(other * x for x in self.coeffs)
        if isinstance(other, TruncatedSeries):
            return series_mul(self.to_series(other.trunc), other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        n = len(self.coeffs) + len(other.coeffs) - 2
        return Polynomial(_mul_lists(self.coeffs, other.coeffs, n))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int) -> "Polynomial":
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def to_series(self, trunc: int) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs(self.coeffs, trunc)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def q_int(m: int) -> Polynomial:
    """``1 + q + ... + q^(m-1)``."""
    return Polynomial([1] * m)


def exact_poly_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``, raising :class:`NonzeroRemainder` unless exact.

    Integer long division; a non-integral step also counts as a failure.
    """
    if not b.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a.coeffs:
        return Polynomial()
    r = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    if len(r) - 1 < db:
        raise NonzeroRemainder(f"{a} is not divisible by {b}")
    quot = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lead)
        if rem:
            raise NonzeroRemainder(f"{a} is not divisible by {b}")
        quot[k] = c
        if c:
            for i, y in enumerate(b.coeffs):
                r[k + i] -= c * y
    if any(r):
        raise NonzeroRemainder(f"{a} is not divisible by {b}")
    return Polynomial(quot)


def eval_at_one(p: Polynomial) -> int:
    return sum(p.coeffs)


@lru_cache(maxsize=4096)
def gaussian_binomial(m: int, n: int, base_exp: int = 1) -> Polynomial:
    """Gaussian binomial ``[m choose n]`` in the variable ``q^base_exp``.

    Uses ``[m, n] = [m-1, n-1] + x^n [m-1, n]`` with ``x = q^base_exp``.
    """
    if base_exp < 1:
        raise ValueError("base_exp must be positive")
    if n < 0 or m < 0 or n > m:
        return Polynomial()
    if n == 0 or n == m:
        return Polynomial([1])
    return (gaussian_binomial(m - 1, n - 1, base_exp)
            + gaussian_binomial(m - 1, n, base_exp).shift(base_exp * n))


def _q_factorial(m: int, e: int) -> Polynomial:
    # (x;x)_m with x = q^e
    out = Polynomial([1])
    for i in range(1, m + 1):
        out = out * (1 - Polynomial.monomial(e * i))
    return out


def gaussian_binomial_quotient(m: int, n: int, base_exp: int = 1) -> Polynomial:
    """Same polynomial as :func:`gaussian_binomial`, from ``(x;x)_m / ((x;x)_n (x;x)_{m-n})``."""
    if n < 0 or m < 0 or n > m:
        return Polynomial()
    num = _q_factorial(m, base_exp)
    den = _q_factorial(n, base_exp) * _q_factorial(m - n, base_exp)
    return exact_poly_div(num, den)
