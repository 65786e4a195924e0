"""Exact scalar arithmetic over three coefficient domains.

An ExactScalar is an immutable tagged value in one of:

  * ``int``  -- arbitrary-precision integers (plain Python int)
  * ``rat``  -- reduced rationals with positive denominator (fractions.Fraction)
  * ``poly`` -- sparse polynomials over the integers in the four variables
                a, b, c1, c2, stored as a map from exponent vectors
                (ea, eb, ec1, ec2) to nonzero integer coefficients

Arithmetic between different domains is an error, except that an integer
widens into either other domain as a constant.  Division never rounds:
``exact_div`` raises InexactDivisionError when the divisor does not divide
the dividend exactly (integer and polynomial domains).

Multiplications and exact divisions performed while a ``count_ops()``
context is active are tallied on its counter.  Shortcut cases that perform
no payload arithmetic (an operand that is exactly zero or one, a zero
dividend, a divisor of one) are not counted; counts are deterministic for
a given computation.

Polynomials print in a canonical form: monomials in ascending graded
lexicographic order of their (ea, eb, ec1, ec2) exponent vectors, factors
inside a monomial in the order c1, c2, a, b.  The discriminant-like
quantity b*b - c1*a*b - c2*a*a therefore prints as
``b^2 - c1*a*b - c2*a^2``.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

INTEGER = "int"
RATIONAL = "rat"
POLYNOMIAL = "poly"
DOMAINS = (INTEGER, RATIONAL, POLYNOMIAL)

VARIABLES = ("a", "b", "c1", "c2")
# print order inside a monomial: c1, c2, a, b (positions into the key tuple)
_PRINT_ORDER = (2, 3, 0, 1)

Monomial = Tuple[int, int, int, int]
_ZERO_MONO: Monomial = (0, 0, 0, 0)


class DomainMismatchError(TypeError):
    """Arithmetic attempted between incompatible scalar domains."""


class InexactDivisionError(ArithmeticError):
    """Exact division requested but the divisor does not divide evenly."""


class NotInvertibleError(ArithmeticError):
    """Negative power requested in a domain without inverses."""


# ---------------------------------------------------------------------------
# operation counting


@dataclass
class OpCounter:
    muls: int = 0
    divs: int = 0


_COUNTERS: ContextVar[Tuple[OpCounter, ...]] = ContextVar("op_counters", default=())


@contextmanager
def count_ops() -> Iterator[OpCounter]:
    """Count scalar multiplications/exact divisions run under this context.

    Contexts nest: every active counter observes every operation, so an
    outer aggregate and an inner per-call counter can coexist.
    """
    counter = OpCounter()
    token = _COUNTERS.set(_COUNTERS.get() + (counter,))
    try:
        yield counter
    finally:
        _COUNTERS.reset(token)


def _tick_mul() -> None:
    for counter in _COUNTERS.get():
        counter.muls += 1


def _tick_div() -> None:
    for counter in _COUNTERS.get():
        counter.divs += 1


# ---------------------------------------------------------------------------
# sparse polynomials over Z in (a, b, c1, c2)


def _grlex(mono: Monomial) -> Tuple[int, Monomial]:
    return (mono[0] + mono[1] + mono[2] + mono[3], mono)


class Poly:
    """Sparse integer polynomial keyed by (ea, eb, ec1, ec2) exponents.

    Treated as immutable after construction; zero coefficients are never
    stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, int]):
        self.terms = {m: c for m, c in terms.items() if c}

    @classmethod
    def const(cls, value: int) -> "Poly":
        return cls({_ZERO_MONO: value}) if value else cls({})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        if name not in VARIABLES:
            raise ValueError(f"unknown variable {name!r}")
        mono = [0, 0, 0, 0]
        mono[VARIABLES.index(name)] = 1
        return cls({tuple(mono): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {_ZERO_MONO: 1}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            total = merged.get(mono, 0) + coeff
            if total:
                merged[mono] = total
            else:
                merged.pop(mono, None)
        return Poly(merged)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                total = out.get(key, 0) + c1 * c2
                if total:
                    out[key] = total
                else:
                    del out[key]
        return Poly(out)

    def leading(self) -> Monomial:
        return max(self.terms, key=_grlex)

    def exact_div(self, divisor: "Poly") -> "Poly":
        """Exact quotient by repeated leading-term elimination.

        Raises InexactDivisionError unless divisor divides self exactly
        (coefficients included: the quotient must stay over Z).
        """
        lead = divisor.leading()
        lead_coeff = divisor.terms[lead]
        remainder = dict(self.terms)
        quotient: Dict[Monomial, int] = {}
        while remainder:
            top = max(remainder, key=_grlex)
            shift = (top[0] - lead[0], top[1] - lead[1], top[2] - lead[2], top[3] - lead[3])
            if min(shift) < 0:
                raise InexactDivisionError("polynomial division leaves a remainder")
            coeff, residue = divmod(remainder[top], lead_coeff)
            if residue:
                raise InexactDivisionError("polynomial division leaves a remainder")
            quotient[shift] = coeff
            for mono, dc in divisor.terms.items():
                key = (mono[0] + shift[0], mono[1] + shift[1], mono[2] + shift[2], mono[3] + shift[3])
                total = remainder.get(key, 0) - dc * coeff
                if total:
                    remainder[key] = total
                else:
                    remainder.pop(key, None)
        return Poly(quotient)

    def evaluate(self, a: int, b: int, c1: int, c2: int):
        point = (a, b, c1, c2)
        total = 0
        for mono, coeff in self.terms.items():
            term = coeff
            for position, exponent in enumerate(mono):
                if exponent:
                    term *= point[position] ** exponent
            total += term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=_grlex):
            coeff = self.terms[mono]
            factors = []
            for position in _PRINT_ORDER:
                exponent = mono[position]
                if exponent == 1:
                    factors.append(VARIABLES[position])
                elif exponent > 1:
                    factors.append(f"{VARIABLES[position]}^{exponent}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"


# ---------------------------------------------------------------------------
# the tagged scalar


Payload = Union[int, Fraction, Poly]


@dataclass(frozen=True)
class ExactScalar:
    domain: str
    value: Payload

    def is_zero(self) -> bool:
        if self.domain == POLYNOMIAL:
            return self.value.is_zero()
        return self.value == 0

    def is_one(self) -> bool:
        if self.domain == POLYNOMIAL:
            return self.value.is_one()
        return self.value == 1

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"ExactScalar({self.domain}, {self.value})"

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        return add(self, other)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return sub(self, other)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        return mul(self, other)

    def __neg__(self) -> "ExactScalar":
        return neg(self)


def integer(value: int) -> ExactScalar:
    return ExactScalar(INTEGER, int(value))


def rational(numerator, denominator=1) -> ExactScalar:
    return ExactScalar(RATIONAL, Fraction(numerator, denominator))


def polynomial(value: Poly) -> ExactScalar:
    return ExactScalar(POLYNOMIAL, value)


def poly_const(value: int) -> ExactScalar:
    return ExactScalar(POLYNOMIAL, Poly.const(value))


def variable(name: str) -> ExactScalar:
    return ExactScalar(POLYNOMIAL, Poly.variable(name))


def zero(domain: str) -> ExactScalar:
    return _make(domain, 0)


def one(domain: str) -> ExactScalar:
    return _make(domain, 1)


def _make(domain: str, value: int) -> ExactScalar:
    if domain == INTEGER:
        return ExactScalar(INTEGER, value)
    if domain == RATIONAL:
        return ExactScalar(RATIONAL, Fraction(value))
    if domain == POLYNOMIAL:
        return ExactScalar(POLYNOMIAL, Poly.const(value))
    raise ValueError(f"unknown domain {domain!r}")


def widen(x: ExactScalar, domain: str) -> ExactScalar:
    """Embed x into ``domain``; only integer constants widen."""
    if x.domain == domain:
        return x
    if x.domain != INTEGER:
        raise DomainMismatchError(f"cannot widen {x.domain} scalar into {domain}")
    return _make(domain, x.value)


def _coerce(x: ExactScalar, y: ExactScalar) -> Tuple[ExactScalar, ExactScalar]:
    if x.domain == y.domain:
        return x, y
    if x.domain == INTEGER:
        return widen(x, y.domain), y
    if y.domain == INTEGER:
        return x, widen(y, x.domain)
    raise DomainMismatchError(f"cannot mix {x.domain} and {y.domain} scalars")


def add(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    x, y = _coerce(x, y)
    return ExactScalar(x.domain, x.value + y.value)


def sub(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    x, y = _coerce(x, y)
    return ExactScalar(x.domain, x.value - y.value)


def neg(x: ExactScalar) -> ExactScalar:
    return ExactScalar(x.domain, -x.value)


def mul(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    x, y = _coerce(x, y)
    if x.is_zero() or y.is_zero():
        return zero(x.domain)
    if x.is_one():
        return y
    if y.is_one():
        return x
    _tick_mul()
    return ExactScalar(x.domain, x.value * y.value)


def exact_div(x: ExactScalar, y: ExactScalar) -> ExactScalar:
    x, y = _coerce(x, y)
    if y.is_zero():
        raise ZeroDivisionError("exact division by zero")
    if x.is_zero():
        return zero(x.domain)
    if y.is_one():
        return x
    _tick_div()
    if x.domain == INTEGER:
        quotient, residue = divmod(x.value, y.value)
        if residue:
            raise InexactDivisionError(f"{x.value} is not divisible by {y.value}")
        return ExactScalar(INTEGER, quotient)
    if x.domain == RATIONAL:
        return ExactScalar(RATIONAL, x.value / y.value)
    return ExactScalar(POLYNOMIAL, x.value.exact_div(y.value))


def pow_signed(x: ExactScalar, k: int) -> ExactScalar:
    """x**k with signed k.

    Negative k requires an invertible base, which only nonzero rationals
    are here; 0**k is an error for k <= 0.
    """
    if x.is_zero():
        if k <= 0:
            raise ZeroDivisionError("zero cannot be raised to a non-positive power")
        return x
    if k == 0:
        return one(x.domain)
    if k < 0:
        if x.domain != RATIONAL:
            raise NotInvertibleError(f"negative power in non-invertible domain {x.domain}")
        _tick_div()
        x = ExactScalar(RATIONAL, 1 / x.value)
        k = -k
    result = x
    for bit in bin(k)[3:]:
        result = mul(result, result)
        if bit == "1":
            result = mul(result, x)
    return result
