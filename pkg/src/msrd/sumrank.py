"""The sum-rank metric space of square blocks and F_q-linear codes in it."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, ContextMismatch, OutOfRange, ParameterError
from .fields import ExtFieldCtx, FieldSpec, make_extension, make_field
from .linearized import QPoly, rank_rows, to_matrix

DEFAULT_CAP = 1 << 24


@dataclass(frozen=True)
class CodeShape:
    """Block sizes n_1, ..., n_t over F_q, block i realised as F_{q^{n_i}}.

    ``contexts`` defaults to the canonical extension of each size.
    """

    field: FieldSpec
    sizes: tuple[int, ...]
    contexts: tuple[ExtFieldCtx, ...] | None = None
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes or any(n < 1 for n in sizes):
            raise ParameterError("block sizes must be positive and non-empty")
        if self.strict and any(a <= b for a, b in zip(sizes, sizes[1:])):
            raise ParameterError(f"block sizes must be strictly decreasing, got {sizes}")
        if self.contexts is None:
            ctxs = tuple(make_extension(self.field, n) for n in sizes)
        else:
            ctxs = tuple(self.contexts)
            if len(ctxs) != len(sizes) or any(
                c.base != self.field or c.n != n for c, n in zip(ctxs, sizes)
            ):
                raise ContextMismatch("contexts do not match the field and sizes")
        object.__setattr__(self, "contexts", ctxs)

    @classmethod
    def build(cls, q: int | FieldSpec, sizes: Sequence[int], strict: bool = True) -> CodeShape:
        F = q if isinstance(q, FieldSpec) else make_field(int(q))
        return cls(F, tuple(sizes), strict=strict)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def N(self) -> int:
        return sum(self.sizes)

    @property
    def ambient_dimension(self) -> int:
        return sum(n * n for n in self.sizes)

    @property
    def offsets(self) -> tuple[int, ...]:
        """Start of each block in the flattened coordinate vector."""
        out, acc = [], 0
        for n in self.sizes:
            out.append(acc)
            acc += n * n
        return tuple(out)


@dataclass(frozen=True)
class SumRankVector:
    shape: CodeShape
    blocks: tuple[QPoly, ...]

    def __post_init__(self):
        if len(self.blocks) != self.shape.t:
            raise ContextMismatch("wrong number of blocks for the shape")
        for b, ctx in zip(self.blocks, self.shape.contexts):
            if b.ctx != ctx:
                raise ContextMismatch(f"block over {b.ctx!r} where {ctx!r} was expected")

    @classmethod
    def zero(cls, shape: CodeShape) -> SumRankVector:
        return cls(shape, tuple(QPoly.zero(c) for c in shape.contexts))

    def _same(self, other: SumRankVector) -> None:
        if not isinstance(other, SumRankVector) or other.shape != self.shape:
            raise ContextMismatch("vectors have different shapes")

    def __add__(self, other: SumRankVector) -> SumRankVector:
        self._same(other)
        return SumRankVector(self.shape, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: SumRankVector) -> SumRankVector:
        self._same(other)
        return SumRankVector(self.shape, tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c: int) -> SumRankVector:
        return SumRankVector(self.shape, tuple(b.scale(c) for b in self.blocks))

    def __bool__(self) -> bool:
        return any(self.blocks)

    def block_ranks(self) -> tuple[int, ...]:
        return tuple(b.rank() for b in self.blocks)

    def weight(self) -> int:
        return sum_rank_weight(self)

    def flatten(self) -> tuple[int, ...]:
        """Concatenated row-major block matrices over F_q."""
        out: list[int] = []
        for b in self.blocks:
            out.extend(to_matrix(b).entries)
        return tuple(out)


def sum_rank_weight(v: SumRankVector) -> int:
    return sum(b.rank() for b in v.blocks)


def sum_rank_distance(x: SumRankVector, y: SumRankVector) -> int:
    return sum_rank_weight(x - y)


@dataclass(frozen=True)
class LinearSumRankCode:
    """An F_q-linear code spanned by ``basis``; |C| = q^k when the basis is independent."""

    shape: CodeShape
    basis: tuple[SumRankVector, ...]
    designed_distance: int

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        for v in self.basis:
            if v.shape != self.shape:
                raise ContextMismatch("basis vector has a different shape")
        if len(self.basis) > self.shape.ambient_dimension:
            raise ParameterError("more generators than the ambient dimension")

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.shape.q**self.k

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        """k x sum(n_i^2) matrix over F_q whose rows are the flattened generators."""
        D = self.shape.ambient_dimension
        if not self.basis:
            return np.zeros((0, D), dtype=np.int64)
        return np.array([v.flatten() for v in self.basis], dtype=np.int64)

    def without(self, index: int) -> LinearSumRankCode:
        """The subcode obtained by dropping one generator."""
        basis = self.basis[:index] + self.basis[index + 1:]
        return LinearSumRankCode(self.shape, basis, self.designed_distance)

    def __iter__(self) -> Iterator[SumRankVector]:
        return enumerate_codewords(self)


def full_space_code(shape: CodeShape) -> LinearSumRankCode:
    """The whole ambient space, spanned by beta * x^{q^i} in every block."""
    basis = []
    for bi, ctx in enumerate(shape.contexts):
        for i in range(ctx.n):
            for beta in ctx.basis():
                blocks = [QPoly.zero(c) for c in shape.contexts]
                blocks[bi] = QPoly.monomial(ctx, beta, i)
                basis.append(SumRankVector(shape, tuple(blocks)))
    return LinearSumRankCode(shape, tuple(basis), 1)


def message_digits(q: int, k: int, index: int) -> list[int]:
    """Message for ``index``: base-q digits, least significant coordinate first."""
    out = []
    for _ in range(k):
        index, r = divmod(index, q)
        out.append(r)
    return out


def combine(code: LinearSumRankCode, message: Sequence[int]) -> SumRankVector:
    if len(message) != code.k:
        raise ParameterError(f"message has length {len(message)}, expected {code.k}")
    F = code.shape.field
    acc = SumRankVector.zero(code.shape)
    for m, v in zip(message, code.basis):
        m = int(m)
        F._check(m)
        if m:
            acc = acc + v.scale(m)
    return acc


def check_budget(code: LinearSumRankCode, cap: int | None) -> int:
    total = code.size
    if cap is not None and total > cap:
        raise BudgetExceeded(f"{total} codewords exceed the cap of {cap}")
    return total


def enumerate_codewords(
    code: LinearSumRankCode,
    cap: int | None = DEFAULT_CAP,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[SumRankVector]:
    """Yield combine(code, message(i)) for i in [start, stop).

    Messages are ordered lexicographically with the first coordinate
    varying fastest, so disjoint index ranges partition the code.
    """
    total = check_budget(code, cap)
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total:
        raise OutOfRange(f"invalid message range [{start}, {stop}) for {total} codewords")
    q, k = code.shape.q, code.k
    for idx in range(start, stop):
        yield combine(code, message_digits(q, k, idx))


def basis_rank_check(code: LinearSumRankCode) -> int:
    """F_q-rank of the stacked flattened generators; equals k iff they are independent."""
    return rank_rows(code.shape.field, code.generator_matrix.tolist())
