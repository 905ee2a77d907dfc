"""Exact and sampled minimum sum-rank distance, weight distributions, MSRD verdicts.

Exhaustive scans evaluate codewords in batches: messages in an index range
are expanded to base-q digits, multiplied by the flattened generator matrix,
and every block is rank-reduced at once with a vectorised elimination.
Ranges are independent, so a scan can be split across worker threads; the
reduction (min / histogram sum) does not depend on how it was split.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .bounds import defect as _defect
from .bounds import singleton_dimension
from .errors import InvariantBreach, ParameterError
from .fields import FieldSpec
from .sumrank import DEFAULT_CAP, LinearSumRankCode, basis_rank_check, check_budget

CHUNK = 1 << 15


def resolve_workers(workers: int | None = None) -> int:
    """Worker count from the argument or ``MSRD_THREADS`` (0 or unset means all CPUs)."""
    if workers is None:
        workers = int(os.environ.get("MSRD_THREADS", "0") or 0)
    if workers < 0:
        raise ParameterError("worker count must be >= 0")
    return workers or os.cpu_count() or 1


def batch_rank(A: np.ndarray, F: FieldSpec) -> np.ndarray:
    """Ranks over F of a stack of matrices ``A`` with shape (B, rows, cols)."""
    A = np.array(A, dtype=np.int64, copy=True)
    B, n, m = A.shape
    rank = np.zeros(B, dtype=np.int64)
    if n == 0 or m == 0 or B == 0:
        return rank
    ar = np.arange(B)
    rowidx = np.arange(n)
    prime = F.is_prime_field
    p = F.p
    if prime:
        inv_p = np.array([0] + [pow(x, -1, p) for x in range(1, p)], dtype=np.int64)
    else:
        T = F.tables
    for c in range(m):
        active = rowidx[None, :] >= rank[:, None]
        cand = (A[:, :, c] != 0) & active
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        r = np.minimum(rank, n - 1)
        prow = A[ar, piv]
        rrow = A[ar, r]
        hs = ar[has]
        A[hs, r[has]] = prow[has]
        A[hs, piv[has]] = rrow[has]
        below = has[:, None] & (rowidx[None, :] > r[:, None])
        if prime:
            pinv = inv_p[prow[:, c]]
            factor = np.where(below, A[:, :, c] * pinv[:, None] % p, 0)
            A = (A - factor[:, :, None] * prow[:, None, :]) % p
        else:
            pinv = T.inv[prow[:, c]]
            factor = np.where(below, T.mul[A[:, :, c], pinv[:, None]], 0)
            A = T.sub[A, T.mul[factor[:, :, None], prow[:, None, :]]]
        rank += has
    return rank


class BatchEvaluator:
    """Vectorised codeword expansion and sum-rank weights for one code."""

    def __init__(self, code: LinearSumRankCode):
        self.code = code
        self.field = code.shape.field
        self.q = code.shape.q
        self.k = code.k
        self.G = code.generator_matrix
        self.blocks = list(zip(code.shape.offsets, code.shape.sizes))

    def digits(self, start: int, stop: int) -> np.ndarray:
        idx = np.arange(start, stop, dtype=np.int64)
        powers = self.q ** np.arange(self.k, dtype=np.int64)
        return (idx[:, None] // powers[None, :]) % self.q

    def codewords(self, digits: np.ndarray) -> np.ndarray:
        """Flattened codewords for a (B, k) array of messages."""
        F = self.field
        if F.is_prime_field:
            return (digits @ self.G) % F.p
        T = F.tables
        acc = np.zeros((digits.shape[0], self.G.shape[1]), dtype=np.int64)
        for i in range(self.k):
            acc = T.add[acc, T.mul[digits[:, i, None], self.G[i][None, :]]]
        return acc

    def weights(self, digits: np.ndarray) -> np.ndarray:
        W = self.codewords(digits)
        out = np.zeros(W.shape[0], dtype=np.int64)
        for off, n in self.blocks:
            out += batch_rank(W[:, off:off + n * n].reshape(-1, n, n), self.field)
        return out

    def range_weights(self, start: int, stop: int) -> np.ndarray:
        return self.weights(self.digits(start, stop))


def _ranges(start: int, stop: int, chunk: int) -> list[tuple[int, int]]:
    return [(a, min(a + chunk, stop)) for a in range(start, stop, chunk)]


def _scan(code: LinearSumRankCode, cap: int | None, workers: int | None, reduce, chunk: int):
    total = check_budget(code, cap)
    ev = BatchEvaluator(code)
    parts = _ranges(0, total, chunk)
    nw = resolve_workers(workers)
    if nw == 1 or len(parts) == 1:
        return [reduce(ev.range_weights(a, b)) for a, b in parts]
    with ThreadPoolExecutor(max_workers=nw) as ex:
        return list(ex.map(lambda ab: reduce(ev.range_weights(*ab)), parts))


def weight_distribution(
    code: LinearSumRankCode,
    cap: int | None = DEFAULT_CAP,
    workers: int | None = 1,
    chunk: int = CHUNK,
) -> dict[int, int]:
    """Number of messages per codeword sum-rank weight (zero counts omitted)."""
    size = code.shape.N + 1
    hists = _scan(code, cap, workers, lambda w: np.bincount(w, minlength=size), chunk)
    hist = np.sum(hists, axis=0)
    return {int(w): int(c) for w, c in enumerate(hist) if c}


def min_distance_exhaustive(
    code: LinearSumRankCode,
    cap: int | None = DEFAULT_CAP,
    workers: int | None = 1,
    chunk: int = CHUNK,
) -> int | None:
    """Exact minimum weight over nonzero codewords; None for the zero code."""

    def nonzero_min(w: np.ndarray) -> int:
        w = w[w > 0]
        return int(w.min()) if w.size else -1

    mins = [m for m in _scan(code, cap, workers, nonzero_min, chunk) if m >= 0]
    return min(mins) if mins else None


def min_distance_sampled(code: LinearSumRankCode, trials: int, seed: int = 0) -> int:
    """Minimum weight over ``trials`` random nonzero messages: an upper bound on the distance.

    Messages come from ``numpy.random.default_rng(seed)`` (PCG64), so a
    given seed always gives the same estimate.
    """
    if trials < 1:
        raise ParameterError("trials must be >= 1")
    if code.k == 0:
        raise ParameterError("the zero code has no nonzero codewords")
    rng = np.random.default_rng(seed)
    ev = BatchEvaluator(code)
    best = None
    left = trials
    while left:
        batch = rng.integers(0, code.shape.q, size=(min(left, CHUNK), code.k), dtype=np.int64)
        batch = batch[batch.any(axis=1)]
        if not batch.size:
            continue
        w = ev.weights(batch)
        w = w[w > 0]
        if w.size:
            m = int(w.min())
            best = m if best is None else min(best, m)
        left -= batch.shape[0]
    if best is None:  # pragma: no cover - needs a dependent basis spanning {0}
        raise InvariantBreach("every sampled message encoded to zero")
    return best


@dataclass(frozen=True)
class MSRDReport:
    q: int
    sizes: tuple[int, ...]
    designed_distance: int
    generators: int
    dimension: int
    singleton_dimension: int
    defect: int
    distance: int | None

    @property
    def msrd(self) -> bool:
        return self.defect == 0 and self.distance == self.designed_distance

    def as_dict(self) -> dict:
        out = asdict(self)
        out["sizes"] = list(self.sizes)
        out["msrd"] = self.msrd
        return out


def check_singleton(code: LinearSumRankCode, dimension: int, distance: int | None) -> None:
    """Raise InvariantBreach if a code of this dimension and distance would beat the bound."""
    if distance is None:
        return
    bound = singleton_dimension(code.shape, distance)
    if dimension > bound:
        raise InvariantBreach(
            f"dimension {dimension} with distance {distance} exceeds the Singleton bound {bound}"
        )


def is_msrd(
    code: LinearSumRankCode,
    cap: int | None = DEFAULT_CAP,
    workers: int | None = 1,
) -> MSRDReport:
    dim = basis_rank_check(code)
    bound = singleton_dimension(code.shape, code.designed_distance)
    gap = _defect(code.shape, code.designed_distance, dim)
    dist = min_distance_exhaustive(code, cap, workers) if dim else None
    check_singleton(code, dim, dist)
    return MSRDReport(
        q=code.shape.q,
        sizes=code.shape.sizes,
        designed_distance=code.designed_distance,
        generators=code.k,
        dimension=dim,
        singleton_dimension=bound,
        defect=gap,
        distance=dist,
    )
