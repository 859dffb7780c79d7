"""Sylvester matrices, resultants, and discriminants with declared degrees.

The resultant here is always the raw Sylvester determinant for a pair
of *declared* degrees (m, n).  Declared degrees may exceed the actual
degrees (padding with zero rows is legitimate and meaningful: it
multiplies the resultant by a power of the other leading coefficient),
but never fall below them.  Keeping the declared degree first-class is
what lets symbolic leading coefficients specialize to zero without
changing the matrix shape.

The discriminant of P at declared degree d is the raw determinant
Res_{d,d-1}(P, P'), with no content or sign normalization: for
t^2 + b*t + c it is 4c - b^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, RingMismatchError
from .rings import Ring, RingElement
from .unipoly import UniPoly


@dataclass(frozen=True)
class SylvesterSpec:
    """Declared degrees (m for the first polynomial, n for the second)."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ParameterError(f"declared degrees must be nonnegative, got {self}")


def _declared_degree(poly: UniPoly, declared: int | None, which: str) -> int:
    if declared is None:
        if poly.is_zero():
            raise ParameterError(
                f"{which} is the zero polynomial; a declared degree is required"
            )
        return poly.degree
    if poly.degree > declared:
        raise ParameterError(
            f"declared degree {declared} of {which} is below its actual degree {poly.degree}"
        )
    return declared


def sylvester_matrix(
    F: UniPoly, G: UniPoly, spec: SylvesterSpec | None = None
) -> list[list[RingElement]]:
    """The (m+n) x (m+n) Sylvester matrix of F and G.

    The first n rows carry the coefficients of F from degree m down to
    0, row i shifted right by i columns; the remaining m rows carry G
    the same way.
    """
    if F.coeff_ring != G.coeff_ring or F.var != G.var:
        raise RingMismatchError("resultant arguments live in different polynomial rings")
    m = _declared_degree(F, spec.m if spec else None, "the first polynomial")
    n = _declared_degree(G, spec.n if spec else None, "the second polynomial")
    ring = F.coeff_ring
    size = m + n
    zero = ring.zero
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = F.coefficient(m - k)
        rows.append(row)
    for j in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[j + k] = G.coefficient(n - k)
        rows.append(row)
    return rows


def det_fraction_free(matrix: list[list[RingElement]], ring: Ring) -> RingElement:
    """Bareiss determinant; every division is exact over an integral domain."""
    n = len(matrix)
    if n == 0:
        return ring.one
    work = [list(row) for row in matrix]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        pivot_row = None
        for r in range(k, n):
            if not work[r][k].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            return ring.zero
        if pivot_row != k:
            work[k], work[pivot_row] = work[pivot_row], work[k]
            sign = -sign
        pivot = work[k][k]
        divide = not prev.is_one()
        for i in range(k + 1, n):
            row_i = work[i]
            head = row_i[k]
            for j in range(k + 1, n):
                value = pivot * row_i[j] - head * work[k][j]
                row_i[j] = value.exact_div(prev) if divide else value
            row_i[k] = ring.zero
        prev = pivot
    det = work[n - 1][n - 1]
    return det if sign > 0 else -det


def det_cofactor(matrix: list[list[RingElement]], ring: Ring) -> RingElement:
    """Division-free cofactor expansion; exponential, for cross-checks only."""
    n = len(matrix)
    if n == 0:
        return ring.one
    if n == 1:
        return matrix[0][0]
    total = ring.zero
    for i in range(n):
        head = matrix[i][0]
        if head.is_zero():
            continue
        minor = [row[1:] for r, row in enumerate(matrix) if r != i]
        term = head * det_cofactor(minor, ring)
        total = total + term if i % 2 == 0 else total - term
    return total


def resultant(F: UniPoly, G: UniPoly, spec: SylvesterSpec | None = None) -> RingElement:
    """Raw Sylvester determinant of (F, G) at the declared degrees."""
    return det_fraction_free(sylvester_matrix(F, G, spec), F.coeff_ring)


def bezout_certificate(
    F: UniPoly, G: UniPoly, spec: SylvesterSpec | None = None
) -> tuple[UniPoly, UniPoly, RingElement]:
    """Cofactors (U, V, r) with U*F + V*G = r, r the resultant.

    U and V come from the cofactor expansion of the Sylvester matrix
    along its last column (the classical proof that the resultant lies
    in the ideal (F, G)), so the identity holds over any coefficient
    ring and can be re-verified independently by multiplying out.
    """
    matrix = sylvester_matrix(F, G, spec)
    size = len(matrix)
    if size == 0:
        raise ParameterError(
            "the empty Sylvester matrix carries no cofactor identity"
        )
    ring = F.coeff_ring
    m = _declared_degree(F, spec.m if spec else None, "the first polynomial")
    n = size - m
    cofactors = []
    for k in range(size):
        minor = [row[:-1] for i, row in enumerate(matrix) if i != k]
        value = det_fraction_free(minor, ring)
        cofactors.append(value if (k + size - 1) % 2 == 0 else -value)
    U = UniPoly(ring, F.var, [cofactors[n - 1 - e] for e in range(n)] if n else ())
    V = UniPoly(ring, F.var, [cofactors[n + m - 1 - e] for e in range(m)])
    return U, V, det_fraction_free(matrix, ring)


def discriminant(P: UniPoly, degree: int | None = None) -> RingElement:
    """Raw discriminant Res_{d,d-1}(P, P') at declared degree d >= 1."""
    d = _declared_degree(P, degree, "the polynomial")
    if d < 1:
        raise ParameterError(f"the discriminant needs declared degree >= 1, got {d}")
    return resultant(P, P.derivative(), SylvesterSpec(d, d - 1))


def classify_discriminant(P: UniPoly, degree: int | None = None) -> tuple[str, RingElement]:
    """Separability verdict from the discriminant.

    Returns (verdict, value) where the verdict is "separable" when the
    discriminant is a unit, "inseparable" when it is nilpotent, and
    "neither" otherwise (the base then splits into the locus where the
    value is inverted and the locus where it vanishes).
    """
    value = discriminant(P, degree)
    if value.is_unit():
        return "separable", value
    if value.is_nilpotent():
        return "inseparable", value
    return "neither", value
