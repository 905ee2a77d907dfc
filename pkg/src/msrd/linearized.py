"""q-polynomials over F_{q^n} and their matrices over F_q.

A q-polynomial f = a_0 x + a_1 x^q + ... + a_{n-1} x^{q^{n-1}} is an
F_q-linear map of F_{q^n}.  Its matrix in the power basis has, as column
j, the coordinates of f(z^j); coordinate vectors are columns, so
``coords(f(x)) == to_matrix(f) @ coords(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ContextMismatch, OutOfRange, ParameterError
from .fields import ExtFieldCtx, FieldElement, FieldSpec


@dataclass(frozen=True)
class FqMatrix:
    """A dense matrix over F_q with integer-encoded entries in row-major order."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ParameterError("entry count does not match the dimensions")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]]) -> FqMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ParameterError("ragged rows")
        return cls(field, len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> FqMatrix:
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> FqMatrix:
        return cls(field, rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    def __add__(self, other: FqMatrix) -> FqMatrix:
        if (self.field, self.rows, self.cols) != (other.field, other.rows, other.cols):
            raise ContextMismatch("matrix shapes or fields differ")
        F = self.field
        return FqMatrix(F, self.rows, self.cols,
                        tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def matvec(self, v: Sequence[int]) -> tuple[int, ...]:
        F = self.field
        out = []
        for row in self.row_list():
            acc = 0
            for a, b in zip(row, v):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)


def rank_rows(F: FieldSpec, rows: Iterable[Sequence[int]]) -> int:
    """Rank over F of the given row vectors (Gaussian elimination, first-nonzero pivot)."""
    R = [list(r) for r in rows]
    if not R:
        return 0
    ncols = len(R[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[rank], R[piv] = R[piv], R[rank]
        inv = F.inv(R[rank][c])
        prow = [F.mul(inv, x) for x in R[rank]]
        R[rank] = prow
        for i in range(rank + 1, len(R)):
            f = R[i][c]
            if f:
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], prow)]
        rank += 1
        if rank == len(R):
            break
    return rank


def rank_fq(M: FqMatrix) -> int:
    return rank_rows(M.field, M.row_list())


@dataclass(frozen=True)
class QPoly:
    """The q-polynomial sum_i coeffs[i] * x^{q^i} over ``ctx`` (exactly n coefficients)."""

    ctx: ExtFieldCtx
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.n:
            raise OutOfRange(f"a q-polynomial over {self.ctx!r} needs exactly {self.ctx.n} coefficients")
        for a in self.coeffs:
            if a.ctx != self.ctx:
                raise ContextMismatch(f"coefficient {a!r} is not in {self.ctx!r}")

    @classmethod
    def from_coeffs(cls, ctx: ExtFieldCtx, coeffs: Sequence[FieldElement]) -> QPoly:
        """Pad ``coeffs`` with zeros up to length n."""
        coeffs = list(coeffs)
        if len(coeffs) > ctx.n:
            raise OutOfRange(f"q-degree must be < {ctx.n}")
        return cls(ctx, tuple(coeffs) + (ctx.zero(),) * (ctx.n - len(coeffs)))

    @classmethod
    def zero(cls, ctx: ExtFieldCtx) -> QPoly:
        return cls(ctx, (ctx.zero(),) * ctx.n)

    @classmethod
    def monomial(cls, ctx: ExtFieldCtx, a: FieldElement, i: int) -> QPoly:
        """a * x^{q^i}."""
        if not 0 <= i < ctx.n:
            raise OutOfRange(f"q-degree must be < {ctx.n}")
        coeffs = [ctx.zero()] * ctx.n
        coeffs[i] = a
        return cls(ctx, tuple(coeffs))

    @property
    def q_degree(self) -> int:
        """Largest index with a nonzero coefficient; -1 for the zero polynomial."""
        return max((i for i, a in enumerate(self.coeffs) if a), default=-1)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _same(self, other: QPoly) -> None:
        if not isinstance(other, QPoly) or other.ctx != self.ctx:
            raise ContextMismatch("q-polynomials live over different fields")

    def __add__(self, other: QPoly) -> QPoly:
        self._same(other)
        return QPoly(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: QPoly) -> QPoly:
        self._same(other)
        return QPoly(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> QPoly:
        return QPoly(self.ctx, tuple(-a for a in self.coeffs))

    def scale(self, c: int) -> QPoly:
        """Multiply by c in F_q; this is F_q-scaling of the linear map."""
        return QPoly(self.ctx, tuple(a.scale(c) for a in self.coeffs))

    def lmul(self, c: FieldElement) -> QPoly:
        """Left-multiply every coefficient by c in F_{q^n}, i.e. the map x -> c * f(x)."""
        if c.ctx != self.ctx:
            raise ContextMismatch(f"{c!r} is not in {self.ctx!r}")
        return QPoly(self.ctx, tuple(c * a for a in self.coeffs))

    def __call__(self, x: FieldElement) -> FieldElement:
        return qpoly_eval(self, x)

    def to_matrix(self) -> FqMatrix:
        return to_matrix(self)

    def rank(self) -> int:
        return qpoly_rank(self)


def qpoly_eval(f: QPoly, x: FieldElement) -> FieldElement:
    if x.ctx != f.ctx:
        raise ContextMismatch(f"{x!r} is not in {f.ctx!r}")
    acc = f.ctx.zero()
    xi = x
    for i, a in enumerate(f.coeffs):
        if i:
            xi = xi.frobenius(1)
        if a:
            acc = acc + a * xi
    return acc


def to_matrix(f: QPoly) -> FqMatrix:
    n = f.ctx.n
    cols = [qpoly_eval(f, e).coords for e in f.ctx.basis()]
    return FqMatrix(f.ctx.base, n, n, tuple(cols[j][i] for i in range(n) for j in range(n)))


def qpoly_rank(f: QPoly) -> int:
    return rank_fq(to_matrix(f))


def solve_fq(F: FieldSpec, columns: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int] | None:
    """Coefficients c with sum_l c_l * columns[l] == rhs, or None if rhs is outside the span.

    The columns must be linearly independent.
    """
    m = len(columns)
    rows = [[col[i] for col in columns] + [rhs[i]] for i in range(len(rhs))]
    rank = 0
    pivots = []
    for c in range(m):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            raise ParameterError("columns are linearly dependent")
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][c])
        rows[rank] = [F.mul(inv, x) for x in rows[rank]]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != rank and f:
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[rank])]
        pivots.append(rank)
        rank += 1
    if any(r[m] for r in rows[rank:]):
        return None
    return [rows[i][m] for i in pivots]
