"""Singleton bound for sum-rank-metric codes and construction eligibility.

Every target distance 1 <= d <= N is written uniquely as
``d = n_1 + ... + n_{j-1} + d_1`` with ``1 <= d_1 <= n_j``; the bound's
``delta`` is ``d_1 - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import InvalidDistance, InvariantBreach, ParameterError
from .sumrank import CodeShape


@dataclass(frozen=True)
class RectShape:
    """Block sizes (n_i, m_i) with n_i <= m_i and m_1 >= ... >= m_t."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(n), int(m)) for n, m in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ParameterError("at least one block is required")
        for n, m in pairs:
            if not 1 <= n <= m:
                raise ParameterError(f"block ({n}, {m}) violates 1 <= n_i <= m_i")
        ms = [m for _, m in pairs]
        if any(a < b for a, b in zip(ms, ms[1:])):
            raise ParameterError("m_i must be non-increasing")

    @classmethod
    def square(cls, sizes: Sequence[int]) -> RectShape:
        return cls(tuple((n, n) for n in sizes))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.pairs)

    @property
    def N(self) -> int:
        return sum(self.sizes)


ShapeLike = Union[CodeShape, RectShape, Sequence[int]]


def _rect(shape: ShapeLike) -> RectShape:
    if isinstance(shape, RectShape):
        return shape
    if isinstance(shape, CodeShape):
        return RectShape.square(shape.sizes)
    return RectShape.square(shape)


@dataclass(frozen=True)
class DistanceProfile:
    d_sr: int
    j: int  # 1-based block index
    d_1: int

    @property
    def delta(self) -> int:
        return self.d_1 - 1


def decompose_distance(shape: ShapeLike, d_sr: int) -> DistanceProfile:
    sizes = _rect(shape).sizes
    N = sum(sizes)
    if not 1 <= d_sr <= N:
        raise InvalidDistance(f"distance {d_sr} outside [1, {N}]")
    rest = d_sr
    for j, n in enumerate(sizes, start=1):
        if rest <= n:
            return DistanceProfile(d_sr, j, rest)
        rest -= n
    raise AssertionError("unreachable")  # pragma: no cover


def singleton_dimension(shape: ShapeLike, d_sr: int) -> int:
    """log_q of the largest possible code with minimum sum-rank distance ``d_sr``."""
    rect = _rect(shape)
    prof = decompose_distance(rect, d_sr)
    j = prof.j - 1
    return sum(n * m for n, m in rect.pairs[j:]) - rect.pairs[j][1] * prof.delta


def defect(shape: ShapeLike, d_sr: int, k: int) -> int:
    if k < 0:
        raise ParameterError("dimension must be non-negative")
    gap = singleton_dimension(shape, d_sr) - k
    if gap < 0:
        raise InvariantBreach(
            f"dimension {k} exceeds the Singleton bound {k + gap} at distance {d_sr}"
        )
    return gap


@dataclass(frozen=True)
class EligibilityReport:
    """Which hypotheses of the general construction hold for (sizes, d_sr).

    ``condition1`` is ``None`` when it is vacuous (j = 1).  ``all_distances``
    is the distance-independent condition n_i >= n_{i+1}^2 + ... + n_t^2
    for every i, under which every distance is reachable.
    """

    sizes: tuple[int, ...]
    profile: DistanceProfile
    strictly_decreasing: bool
    condition1: bool | None
    condition2: bool
    all_distances: bool

    @property
    def eligible(self) -> bool:
        return self.strictly_decreasing and self.condition1 is not False and self.condition2

    def failures(self) -> list[str]:
        n, p = self.sizes, self.profile
        j, d1 = p.j, p.d_1
        tail = sum(x * x for x in n[j:])
        out = []
        if not self.strictly_decreasing:
            out.append(f"sizes {n} are not strictly decreasing")
        if self.condition1 is False:
            need = n[j - 1] * (n[j - 1] - d1 + 1) + tail
            out.append(f"prefix capacity: n_{j - 1} = {n[j - 2]} < {need}")
        if not self.condition2:
            out.append(f"tail capacity: n_{j} = {n[j - 1]} < {tail}")
        return out


def check_eligibility(shape: ShapeLike, d_sr: int) -> EligibilityReport:
    sizes = _rect(shape).sizes if not isinstance(shape, CodeShape) else shape.sizes
    prof = decompose_distance(sizes, d_sr)
    j, d1 = prof.j, prof.d_1
    tail = sum(n * n for n in sizes[j:])
    nj = sizes[j - 1]
    cond1 = None if j == 1 else sizes[j - 2] >= nj * (nj - d1 + 1) + tail
    cond2 = nj >= tail
    all_distances = all(sizes[i] >= sum(n * n for n in sizes[i + 1:]) for i in range(len(sizes)))
    strict = all(a > b for a, b in zip(sizes, sizes[1:]))
    return EligibilityReport(tuple(sizes), prof, strict, cond1, cond2, all_distances)
