"""Explicit MSRD codes with strictly decreasing square block sizes.

Blocks 1..j-1 are "saturated": each generator places a nonzero constant
coefficient there (a * x with a != 0 has full rank n_i), while the
remaining distance is earned in blocks j..t.  Several independent
couplings share the constant-coefficient slot of a saturated block by
living in disjoint coordinate subspaces of F_{q^{n_i}}; an index-aligned
isomorphism identifies each subspace with a smaller field F_{q^m}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import DistanceProfile, check_eligibility, decompose_distance
from .errors import CapacityExceeded, ContextMismatch, IneligibleParameters, OutOfRange
from .fields import ExtFieldCtx, FieldElement, FieldSpec
from .linearized import QPoly, rank_rows, solve_fq
from .sumrank import CodeShape, LinearSumRankCode, SumRankVector


@dataclass(frozen=True)
class Subspace:
    """An F_q-subspace of an extension field, given by a basis."""

    ambient: ExtFieldCtx
    basis: tuple[FieldElement, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combination(self, coeffs: Sequence[int]) -> FieldElement:
        acc = self.ambient.zero()
        for c, b in zip(coeffs, self.basis):
            if c:
                acc = acc + b.scale(c)
        return acc

    def coordinates(self, x: FieldElement) -> list[int] | None:
        """Coordinates of ``x`` in this basis, or None when x is not in the subspace."""
        return solve_fq(self.ambient.base, [b.coords for b in self.basis], x.coords)


@dataclass(frozen=True)
class SubspaceDecomposition:
    ambient: ExtFieldCtx
    parts: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(p.dim for p in self.parts)

    def certificate(self) -> bool:
        """True iff the parts form a direct sum (stacked bases have full rank)."""
        rows = [b.coords for p in self.parts for b in p.basis]
        return rank_rows(self.ambient.base, rows) == len(rows)


def decompose_field(ctx: ExtFieldCtx, dims: Sequence[int]) -> SubspaceDecomposition:
    """Split consecutive runs of the power basis of ``ctx`` into parts of the given dimensions."""
    if any(d < 0 for d in dims):
        raise OutOfRange("dimensions must be non-negative")
    if sum(dims) > ctx.n:
        raise CapacityExceeded(f"parts of total dimension {sum(dims)} do not fit in {ctx!r}")
    basis = ctx.basis()
    parts, pos = [], 0
    for d in dims:
        parts.append(Subspace(ctx, tuple(basis[pos:pos + d])))
        pos += d
    return SubspaceDecomposition(ctx, tuple(parts))


@dataclass(frozen=True)
class SubspaceIso:
    """F_q-isomorphism from a subspace onto F_{q^m}, sending basis[i] to z^i."""

    source: Subspace
    target: ExtFieldCtx

    def __post_init__(self):
        if self.source.dim != self.target.n or self.source.ambient.base != self.target.base:
            raise ContextMismatch("subspace and target field have different dimensions")

    def forward(self, x: FieldElement) -> FieldElement:
        coords = self.source.coordinates(x)
        if coords is None:
            raise ContextMismatch(f"{x!r} is not in the source subspace")
        return self.target.element(coords)

    def backward(self, y: FieldElement) -> FieldElement:
        if y.ctx != self.target:
            raise ContextMismatch(f"{y!r} is not in {self.target!r}")
        return self.source.combination(y.coords)


def gabidulin_basis(ctx: ExtFieldCtx, k: int) -> list[QPoly]:
    """F_q-basis {beta * x^{q^i} : i < k} of the q-polynomials of q-degree below k."""
    if not 1 <= k <= ctx.n:
        raise OutOfRange(f"k must lie in [1, {ctx.n}]")
    return [QPoly.monomial(ctx, beta, i) for i in range(k) for beta in ctx.basis()]


@dataclass(frozen=True)
class Construction:
    """A constructed code together with the subspace decompositions it used.

    ``saturated`` maps each block index i < j (0-based) to the decomposition
    of its x^{q^0} coefficient space; ``anchor`` is the decomposition of the
    x^{q^{n_j-d_1+1}} coefficient space of block j, when one is used.
    """

    code: LinearSumRankCode
    profile: DistanceProfile
    saturated: dict[int, SubspaceDecomposition]
    anchor: SubspaceDecomposition | None

    def decompositions(self) -> list[SubspaceDecomposition]:
        out = list(self.saturated.values())
        if self.anchor is not None:
            out.append(self.anchor)
        return out


def build_construction(q: int | FieldSpec, sizes: Sequence[int], d_sr: int) -> Construction:
    """Generators for an MSRD code of designed distance ``d_sr``.

    With d_sr = n_1 + ... + n_{j-1} + d_1 and r = n_j - d_1 + 1:

    * part A: r copies of a repetition code over F_{q^{n_j}}; copy w puts
      c * x^{q^w} in block j and the image of c in the w-th n_j-dimensional
      part of every saturated block.
    * part B: for each later block j+s, n_{j+s} copies coupling
      b * x^{q^w} in block j+s with images of b in the saturated blocks
      and, when d_1 >= 2, with an x^{q^r} term in block j.
    """
    shape = CodeShape.build(q, sizes, strict=False)
    prof = decompose_distance(shape, d_sr)
    report = check_eligibility(shape, d_sr)
    if not report.eligible:
        raise IneligibleParameters("; ".join(report.failures()))

    J = prof.j - 1
    sizes, ctxs = shape.sizes, shape.contexts
    nj = sizes[J]
    r = nj - prof.d_1 + 1
    later = list(range(J + 1, shape.t))
    tail_dims = [sizes[b] for b in later for _ in range(sizes[b])]
    # The x^{q^r} slot exists only when r < n_j, i.e. d_1 >= 2.
    use_anchor = prof.d_1 >= 2 and bool(tail_dims)

    saturated = {i: decompose_field(ctxs[i], [nj] * r + tail_dims) for i in range(J)}
    anchor = decompose_field(ctxs[J], tail_dims) if use_anchor else None

    def vector(entries: dict[int, QPoly]) -> SumRankVector:
        return SumRankVector(shape, tuple(entries.get(i, QPoly.zero(c)) for i, c in enumerate(ctxs)))

    gens: list[SumRankVector] = []
    for w in range(r):
        isos = {i: SubspaceIso(saturated[i].parts[w], ctxs[J]) for i in range(J)}
        for c in ctxs[J].basis():
            entries = {i: QPoly.monomial(ctxs[i], iso.backward(c), 0) for i, iso in isos.items()}
            entries[J] = QPoly.monomial(ctxs[J], c, w)
            gens.append(vector(entries))

    pos = 0
    for b_idx in later:
        target = ctxs[b_idx]
        for w in range(sizes[b_idx]):
            isos = {i: SubspaceIso(saturated[i].parts[r + pos], target) for i in range(J)}
            anchor_iso = SubspaceIso(anchor.parts[pos], target) if use_anchor else None
            for b in target.basis():
                entries = {i: QPoly.monomial(ctxs[i], iso.backward(b), 0) for i, iso in isos.items()}
                if anchor_iso is not None:
                    entries[J] = QPoly.monomial(ctxs[J], anchor_iso.backward(b), r)
                entries[b_idx] = QPoly.monomial(target, b, w)
                gens.append(vector(entries))
            pos += 1

    code = LinearSumRankCode(shape, tuple(gens), d_sr)
    return Construction(code, prof, saturated, anchor)


def construct_theorem31(q: int | FieldSpec, sizes: Sequence[int], d_sr: int) -> LinearSumRankCode:
    return build_construction(q, sizes, d_sr).code


def construct_theorem21(q: int | FieldSpec, n1: int, n2: int, d_sr: int) -> LinearSumRankCode:
    """Two-block specialisation; requires n_1 >= n_2^2."""
    if n1 < n2 * n2:
        raise IneligibleParameters(f"two-block construction needs n_1 >= n_2^2, got {n1} < {n2 * n2}")
    return construct_theorem31(q, (n1, n2), d_sr)


def construct(q: int | FieldSpec, sizes: Sequence[int], d_sr: int) -> LinearSumRankCode:
    """Dispatch to the two-block or general construction by block count."""
    sizes = tuple(int(n) for n in sizes)
    if len(sizes) == 2:
        return construct_theorem21(q, sizes[0], sizes[1], d_sr)
    return construct_theorem31(q, sizes, d_sr)
