"""Exact q-analogues and their values at roots of unity.

Everything is integer arithmetic.  A value ``p(zeta**d)`` with ``zeta`` a
primitive m-th root of unity is computed by folding exponents modulo m and
reducing modulo the m-th cyclotomic polynomial; the remainder must be a
constant.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest
from math import factorial, gcd, prod
from typing import Iterable, Sequence

from .tableaux import as_partition, count_syt, hook_lengths


class InexactDivisionError(ArithmeticError):
    pass


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Integer polynomial in q, dense coefficients with index = exponent.

    >>> IntPolynomial([1, 0, 1])
    IntPolynomial('q^2 + 1')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> float | int:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division with remainder; the divisor must be monic up to sign."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = len(divisor.coeffs) - 1
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] * lead
            if c:
                quot[k] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem[:dd] if dd else [])

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise InexactDivisionError(f"{divisor} does not divide {self}")
        return quot

    def __floordiv__(self, other):
        return self.divmod(_coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(_coerce(other))[1]

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by q**k (k >= 0)."""
        return IntPolynomial([0] * k + list(self.coeffs))

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = "" if i == 0 else "q" if i == 1 else f"q^{i}"
            body = str(mag) if (mag != 1 or not term) else ""
            parts.append((sign, body + term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return NotImplemented


def q_int(m: int) -> IntPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return IntPolynomial([1] * m)


def q_factorial(m: int) -> IntPolynomial:
    result = IntPolynomial([1])
    for k in range(2, m + 1):
        result = result * q_int(k)
    return result


def q_hook_polynomial(shape) -> IntPolynomial:
    """[n]_q! divided by the product of [h]_q over all hook lengths."""
    shape = as_partition(shape)
    result = q_factorial(shape.n)
    for row in hook_lengths(shape):
        for h in row:
            result = result.exact_div(q_int(h))
    return result


def kappa(shape) -> int:
    shape = as_partition(shape)
    return sum(i * part for i, part in enumerate(shape.parts))


@dataclass(frozen=True)
class FakeDegree:
    """The polynomial q^(-shift) * body."""

    shift: int
    body: IntPolynomial

    def eval_at_root(self, m: int, d: int) -> int:
        """Exact value at zeta**d for zeta a primitive m-th root of unity."""
        return eval_at_root(self.body.shift((-self.shift) % m), m, d)


def fake_degree(shape) -> FakeDegree:
    shape = as_partition(shape)
    body = q_hook_polynomial(shape)
    if shape.is_rectangle() and shape.num_rows == 3:
        n = shape.parts[0]
        alt = (q_factorial(3 * n) * q_int(2)).exact_div(
            q_factorial(n) * q_factorial(n + 1) * q_factorial(n + 2))
        assert alt == body, "three-row fake degree disagrees with the closed form"
    assert body(1) == count_syt(shape)
    return FakeDegree(kappa(shape), body)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    if m < 1:
        raise ValueError("m must be positive")
    result = IntPolynomial.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            result = result.exact_div(cyclotomic_poly(d))
    return result


class NotRationalError(ArithmeticError):
    """The value at the root of unity is not a rational integer."""


def eval_at_root(p: IntPolynomial, m: int, d: int) -> int:
    """Exact p(zeta**d) for zeta = exp(2 pi i / m)."""
    if m < 1 or d < 0:
        raise ValueError("need m >= 1 and d >= 0")
    folded = [0] * m
    for e, c in enumerate(p.coeffs):
        folded[(e * d) % m] += c
    rem = IntPolynomial(folded) % cyclotomic_poly(m)
    if rem.degree > 0:
        raise NotRationalError(f"p(zeta^{d}) with m={m} reduces to {rem}")
    return rem.coeffs[0] if rem.coeffs else 0


def fixed_webs_formula(n: int, d: int) -> int:
    """Closed-form count of three-row webs on 3n points fixed by 3n/d rotations."""
    if n < 1 or d < 1 or (3 * n) % d:
        raise ValueError(f"d={d} must divide 3n={3 * n}")
    if d == 3 or n % d == 0:
        return factorial(3 * n // d) // (
            factorial(n // d) * factorial((n + 1) // d) * factorial((n + 2) // d))
    return 0


def limit_at_root(numerator: Sequence[int], denominator: Sequence[int], k: int) -> Fraction:
    """Value of prod [a]_q / prod [b]_q as q tends to a primitive k-th root of unity.

    Factors divisible by k contribute a/k (a zero of order one each); the
    remaining factors must pair off by residue mod k, each pair tending to 1.
    Raises ``ValueError`` when the residues do not pair off or there is a pole.
    """
    if k == 1:
        return Fraction(prod(numerator), prod(denominator))
    num_zero = [a for a in numerator if a % k == 0]
    den_zero = [b for b in denominator if b % k == 0]
    if len(num_zero) > len(den_zero):
        return Fraction(0)
    if len(num_zero) < len(den_zero):
        raise ValueError("pole at the root of unity")
    num_res = Counter(a % k for a in numerator if a % k)
    den_res = Counter(b % k for b in denominator if b % k)
    if num_res != den_res:
        raise ValueError("residues do not pair off; limit rules do not apply")
    return Fraction(prod(a // k for a in num_zero), prod(b // k for b in den_zero))


def hook_value_by_limits(shape, m: int, d: int) -> Fraction:
    """X(zeta**d) for the q-hook formula, via the limit rules instead of reduction."""
    shape = as_partition(shape)
    k = m // gcd(m, d)
    hooks = [h for row in hook_lengths(shape) for h in row]
    return limit_at_root(range(1, shape.n + 1), hooks, k)
