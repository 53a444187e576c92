"""Exact square-matrix arithmetic over the scalar tower.

Row-vector convention throughout: vectors act on the left, ``v . A``, and
the (i, j) entry is row i, column j.  Inverses go through the adjugate so
every entry stays inside the ring generated by the inputs and 1/det; this
is what lets Laurent-entry matrices invert exactly when their determinant
is a monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .errors import DomainError, SingularMatrixError
from .scalars import (
    ExactScalar,
    FieldContext,
    RAT_CONTEXT,
    Rationalish,
    as_scalar,
    join_context,
    one,
    ratio,
    rational,
    sqrt_rational,
    zero,
)

Vector = tuple[ExactScalar, ...]


def vector(items: Iterable) -> Vector:
    return tuple(as_scalar(x) for x in items)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(s, u: Vector) -> Vector:
    s = as_scalar(s)
    return tuple(s * a for a in u)


def zero_vector(n: int) -> Vector:
    return tuple(zero() for _ in range(n))


def is_zero_vector(u: Vector) -> bool:
    return all(a.is_zero() for a in u)


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[ExactScalar, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise DomainError("matrix must be square and non-empty")

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> ExactScalar:
        return self.rows[i][j]

    def context(self) -> FieldContext:
        """Join of all entry contexts (raises ContextError when incompatible)."""
        ctx = RAT_CONTEXT
        for row in self.rows:
            for x in row:
                ctx = join_context(ctx, x.context)
        return ctx

    def transpose(self) -> "ExactMatrix":
        n = self.n
        return ExactMatrix(tuple(tuple(self.rows[j][i] for j in range(n))
                                 for i in range(n)))

    def det(self) -> ExactScalar:
        return _det(self)

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return mat_mul(self, other)

    def inverse(self) -> "ExactMatrix":
        d = self.det()
        if d.is_zero():
            raise SingularMatrixError("matrix has determinant 0")
        dinv = d.invert()   # DomainError for non-monomial Laurent determinants
        n = self.n
        adj = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                sign = -1 if (i + j) % 2 else 1
                adj[j][i] = sign * _minor(self, i, j)
        return ExactMatrix(tuple(tuple(dinv * adj[i][j] for j in range(n))
                                 for i in range(n)))

    def is_rational(self) -> bool:
        return all(x.is_rational() for row in self.rows for x in row)

    def is_integer(self) -> bool:
        return all(x.is_integer() for row in self.rows for x in row)

    def sort_key(self) -> tuple:
        return tuple(x.sort_key() for row in self.rows for x in row)

    def __repr__(self) -> str:
        from .dsl import matrix_to_text
        return f"ExactMatrix({matrix_to_text(self)})"


def matrix(rows: Sequence[Sequence[Union[Rationalish, ExactScalar]]]) -> ExactMatrix:
    return ExactMatrix(tuple(tuple(as_scalar(x) for x in row) for row in rows))


def identity(n: int) -> ExactMatrix:
    return matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def scalar_matrix(s, n: int) -> ExactMatrix:
    s = as_scalar(s)
    return ExactMatrix(tuple(tuple(s if i == j else zero() for j in range(n))
                             for i in range(n)))


def shear(n: int, i: int, j: int, lam) -> ExactMatrix:
    """Identity plus lam in position (i, j); lands in SL(n) whenever i != j."""
    if i == j:
        raise DomainError("shear positions must be off-diagonal")
    rows = [[one() if a == b else zero() for b in range(n)] for a in range(n)]
    rows[i][j] = as_scalar(lam)
    return ExactMatrix(tuple(tuple(r) for r in rows))


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.n != b.n:
        raise DomainError(f"dimension mismatch {a.n} vs {b.n}")
    n = a.n
    return ExactMatrix(tuple(
        tuple(sum((a.rows[i][k] * b.rows[k][j] for k in range(n)), zero())
              for j in range(n))
        for i in range(n)))


def vec_mat_mul(v: Vector, a: ExactMatrix) -> Vector:
    if len(v) != a.n:
        raise DomainError(f"vector length {len(v)} vs matrix size {a.n}")
    n = a.n
    return tuple(sum((as_scalar(v[i]) * a.rows[i][j] for i in range(n)), zero())
                 for j in range(n))


def _minor(a: ExactMatrix, i: int, j: int) -> ExactScalar:
    sub = [[a.rows[r][c] for c in range(a.n) if c != j]
           for r in range(a.n) if r != i]
    if not sub:
        return one()
    return _det(ExactMatrix(tuple(tuple(r) for r in sub)))


@lru_cache(maxsize=4096)
def _det(a: ExactMatrix) -> ExactScalar:
    n = a.n
    if n == 1:
        return a.rows[0][0]
    if n == 2:
        return a.rows[0][0] * a.rows[1][1] - a.rows[0][1] * a.rows[1][0]
    total = zero()
    for j in range(n):
        x = a.rows[0][j]
        if x.is_zero():
            continue
        sign = -1 if j % 2 else 1
        total = total + sign * x * _minor(a, 0, j)
    return total


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixClass:
    in_GL: bool
    in_GLQ: bool
    in_GLZ: bool
    in_EZ: bool
    in_SL: bool
    in_SLpm: bool
    in_SO2: bool


def classify(a: ExactMatrix) -> MatrixClass:
    d = a.det()
    invertible = not d.is_zero()
    rational_entries = a.is_rational()
    integer_entries = a.is_integer()
    det_is_one = d == one()
    det_unit = d == one() or d == rational(-1)
    so2 = False
    if a.n == 2 and det_is_one:
        so2 = mat_mul(a.transpose(), a) == identity(2)
    return MatrixClass(
        in_GL=invertible,
        in_GLQ=rational_entries and invertible,
        in_GLZ=integer_entries and invertible,
        in_EZ=integer_entries and det_unit,
        in_SL=det_is_one,
        in_SLpm=det_unit,
        in_SO2=so2,
    )


def block_triangular_member(p: int, q: int, m: ExactMatrix) -> bool:
    """Membership in the block group: top-left p x p rational invertible,
    bottom-left q x p zero, bottom-right q x q invertible; top-right free."""
    if p < 1 or q < 1 or m.n != p + q:
        raise DomainError(f"block dimensions ({p},{q}) do not match size {m.n}")
    top_left = ExactMatrix(tuple(tuple(m.rows[i][j] for j in range(p))
                                 for i in range(p)))
    if not top_left.is_rational() or top_left.det().is_zero():
        return False
    for i in range(p, p + q):
        for j in range(p):
            if not m.rows[i][j].is_zero():
                return False
    bottom_right = ExactMatrix(tuple(tuple(m.rows[i][j] for j in range(p, p + q))
                                     for i in range(p, p + q)))
    return not bottom_right.det().is_zero()


def pattern_quad_member(x: ExactScalar, m: ExactMatrix) -> bool:
    """Membership in { [[a, b*x], [c*x, d]] : a,b,c,d rational, det != 0 }."""
    if m.n != 2:
        raise DomainError("pattern membership is a 2x2 notion")
    x = as_scalar(x)
    if x.is_zero():
        raise DomainError("pattern scalar must be nonzero")
    if not (m.rows[0][0].is_rational() and m.rows[1][1].is_rational()):
        return False
    for off in (m.rows[0][1], m.rows[1][0]):
        r = ratio(off, x)
        if r is None or not r.is_rational():
            return False
    return not m.det().is_zero()


# ---------------------------------------------------------------------------
# circle witness
# ---------------------------------------------------------------------------

def circle_sum_witness(r2: Rationalish, target: Sequence[Rationalish]
                       ) -> tuple[Vector, Vector]:
    """Two exact points of the circle |c|^2 = r2 summing to an axis target.

    The target must sit on a coordinate axis with |s| <= 2*sqrt(r2),
    checked as s^2 <= 4*r2.  Splitting symmetrically about the axis keeps
    the half-chord h = sqrt(r2 - s^2/4) exactly representable.
    """
    r2 = Fraction(r2)
    if r2 <= 0:
        raise DomainError(f"squared radius must be positive, got {r2}")
    tx, ty = (Fraction(c) for c in target)
    if tx != 0 and ty != 0:
        raise DomainError(f"target {target} is not on a coordinate axis")
    s = tx if ty == 0 else ty
    if s * s > 4 * r2:
        raise DomainError(f"target {target} lies outside the reachable disc")
    if s == 0:
        r = sqrt_rational(r2)
        return (r, zero()), (-r, zero())
    h = sqrt_rational(r2 - s * s / 4)
    half = rational(s / 2)
    if ty == 0:
        return (half, h), (half, -h)
    return (h, half), (-h, half)
