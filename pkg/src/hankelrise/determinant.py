"""Exact determinants with deterministic operation counts.

Three general algorithms over any scalar domain, plus a structured
recurrence specialized to the rising-power Hankel family:

  det_cofactor       Laplace expansion along the first row (dim <= 10)
  det_bareiss        fraction-free Gaussian elimination; every division is
                     by the previous pivot and provably exact
  det_condensation   Dodgson condensation dividing by interior entries;
                     a zero interior divisor falls back to det_bareiss on
                     the whole matrix
  condense_structured the same condensation collapsed to scalar sequences
                     D(n, d) indexed by the matrix base offset

Reports carry multiplication/division counts observed by the ring-level
counter, so shortcut operations on exact zeros/ones are not charged.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ring
from .ring import ExactScalar
from .matgen import SquareMatrix
from .sequence import RecurrenceSpec, SequenceCache

COFACTOR = "cofactor"
BAREISS = "bareiss"
CONDENSATION = "condensation"
CONDENSATION_FALLBACK = "condensation-fallback"
CLOSED_FORM = "closed-form"

_COFACTOR_LIMIT = 10


class ZeroDivisorError(ArithmeticError):
    """Structured condensation hit a zero intermediate divisor."""


@dataclass(frozen=True)
class DetReport:
    value: ExactScalar
    algorithm: str
    mul_count: int
    div_count: int
    fallback_used: bool = False


def det_cofactor(matrix: SquareMatrix) -> DetReport:
    if matrix.dim > _COFACTOR_LIMIT:
        raise ValueError(f"cofactor expansion is limited to dimension {_COFACTOR_LIMIT}")
    with ring.count_ops() as counter:
        value = _cofactor(matrix.rows, matrix.domain)
    return DetReport(value, COFACTOR, counter.muls, counter.divs)


def _cofactor(rows, domain: str) -> ExactScalar:
    if len(rows) == 1:
        return rows[0][0]
    total = ring.zero(domain)
    for j, lead in enumerate(rows[0]):
        if lead.is_zero():
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = ring.mul(lead, _cofactor(minor, domain))
        total = ring.add(total, term) if j % 2 == 0 else ring.sub(total, term)
    return total


def det_bareiss(matrix: SquareMatrix) -> DetReport:
    with ring.count_ops() as counter:
        value = _bareiss(matrix)
    return DetReport(value, BAREISS, counter.muls, counter.divs)


def _bareiss(matrix: SquareMatrix) -> ExactScalar:
    n = matrix.dim
    rows = [list(row) for row in matrix.rows]
    sign_flip = False
    previous = ring.one(matrix.domain)
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if not rows[i][k].is_zero()), None)
        if pivot_row is None:
            return ring.zero(matrix.domain)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign_flip = not sign_flip
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numerator = ring.sub(
                    ring.mul(pivot, rows[i][j]), ring.mul(rows[i][k], rows[k][j])
                )
                rows[i][j] = ring.exact_div(numerator, previous)
        previous = pivot
    value = rows[n - 1][n - 1]
    return ring.neg(value) if sign_flip else value


def det_condensation(matrix: SquareMatrix) -> DetReport:
    with ring.count_ops() as counter:
        fallback = False
        value = _condense(matrix)
        if value is None:
            fallback = True
            value = _bareiss(matrix)
    algorithm = CONDENSATION_FALLBACK if fallback else CONDENSATION
    return DetReport(value, algorithm, counter.muls, counter.divs, fallback)


def _minor2(grid, i: int, j: int) -> ExactScalar:
    return ring.sub(
        ring.mul(grid[i][j], grid[i + 1][j + 1]),
        ring.mul(grid[i][j + 1], grid[i + 1][j]),
    )


def _condense(matrix: SquareMatrix):
    """Condensed determinant, or None when an interior divisor is zero."""
    if matrix.dim == 1:
        return matrix.entry(0, 0)
    older = matrix.rows
    current = tuple(
        tuple(_minor2(older, i, j) for j in range(matrix.dim - 1))
        for i in range(matrix.dim - 1)
    )
    while len(current) > 1:
        size = len(current) - 1
        nxt = []
        for i in range(size):
            row = []
            for j in range(size):
                divisor = older[i + 1][j + 1]
                if divisor.is_zero():
                    return None
                row.append(ring.exact_div(_minor2(current, i, j), divisor))
            nxt.append(tuple(row))
        older, current = current, tuple(nxt)
    return current[0][0]


def condense_structured(spec: RecurrenceSpec, n: int, r: int, d: int) -> ExactScalar:
    """Rising-power Hankel determinant via the two-level scalar recurrence

        D(m, t) = (D(m, t-1) * D(m+2, t-1) - D(m+1, t-1)^2) / D(m+2, t-2)

    seeded by D(m, 0) = 1 and D(m, 1) = W_m^(r).  Raises ZeroDivisorError
    when an intermediate divisor vanishes; callers fall back to
    det_bareiss on the built matrix.
    """
    if d < 1:
        raise ValueError("matrix dimension d must be at least 1")
    if r < 0:
        raise ValueError("power length r must be non-negative")
    cache = SequenceCache(spec)
    domain = spec.domain
    below = [ring.one(domain)] * (2 * d - 1)                      # level 0
    current = [cache.rising_power(n + m, r) for m in range(2 * d - 1)]  # level 1
    for level in range(2, d + 1):
        width = 2 * (d - level) + 1
        nxt = []
        for m in range(width):
            divisor = below[m + 2]
            if divisor.is_zero():
                raise ZeroDivisorError(f"zero divisor at level {level - 2}, offset {m + 2}")
            numerator = ring.sub(
                ring.mul(current[m], current[m + 2]),
                ring.mul(current[m + 1], current[m + 1]),
            )
            nxt.append(ring.exact_div(numerator, divisor))
        below, current = current, nxt
    return current[0]
