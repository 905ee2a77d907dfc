"""Exit criteria: exact reproduction of the existence claims at desk scale.

Run alone with ``pytest tests/test_acceptance.py``; a per-criterion
PASS/FAIL summary is printed at the end of the session.
"""

import time

import numpy as np
import pytest

from msrd.bounds import singleton_dimension
from msrd.constructions import build_construction, construct_theorem21, construct_theorem31, gabidulin_basis
from msrd.errors import IneligibleParameters
from msrd.fields import make_extension, make_field
from msrd.linearized import QPoly, qpoly_eval, to_matrix
from msrd.sumrank import CodeShape, LinearSumRankCode, SumRankVector, basis_rank_check, sum_rank_distance
from msrd.verify import (
    check_singleton,
    is_msrd,
    min_distance_exhaustive,
    min_distance_sampled,
    weight_distribution,
)

CAP = 1 << 20
TIME_LIMIT = 300.0

GRID_42 = {1: 20, 2: 16, 3: 12, 4: 8, 5: 4, 6: 2}
GRID_521 = {3: 20, 4: 15, 5: 10, 6: 5, 7: 3, 8: 1}
GRID_521_LARGE = {1: 30, 2: 25}
GRID_Q3 = {1: 5, 2: 3, 3: 1}

_reports = {}


def _verified(q, sizes, d, builder):
    key = (q, tuple(sizes), d)
    if key not in _reports:
        code = builder()
        _reports[key] = (code, is_msrd(code, cap=CAP))
    return _reports[key]


# -- 1 ----------------------------------------------------------------------------

C1 = pytest.mark.criterion(1, "two-block grid q=2 sizes (4,2), d = 1..6, exact distance")


@C1
@pytest.mark.parametrize("d,dim", sorted(GRID_42.items()))
def test_c1_two_block_grid(d, dim):
    code, rep = _verified(2, (4, 2), d, lambda: construct_theorem21(2, 4, 2, d))
    assert singleton_dimension((4, 2), d) == dim
    assert rep.dimension == code.k == dim
    assert rep.defect == 0
    assert rep.distance == d
    assert rep.msrd


@C1
def test_c1_runtime():
    start = time.perf_counter()
    for d in GRID_42:
        assert min_distance_exhaustive(construct_theorem21(2, 4, 2, d), cap=CAP) == d
    assert time.perf_counter() - start <= TIME_LIMIT


# -- 2 ----------------------------------------------------------------------------

C2 = pytest.mark.criterion(2, "three-block grid q=2 sizes (5,2,1), d = 3..8 exact; d = 1,2 dimension/defect")


@C2
@pytest.mark.parametrize("d,dim", sorted(GRID_521.items()))
def test_c2_three_block_grid(d, dim):
    code, rep = _verified(2, (5, 2, 1), d, lambda: construct_theorem31(2, (5, 2, 1), d))
    assert rep.dimension == code.k == dim == rep.singleton_dimension
    assert rep.defect == 0 and rep.distance == d and rep.msrd


@C2
@pytest.mark.parametrize("d,dim", sorted(GRID_521_LARGE.items()))
def test_c2_large_dimensions(d, dim):
    code = construct_theorem31(2, (5, 2, 1), d)
    assert code.k == dim == singleton_dimension((5, 2, 1), d)
    assert basis_rank_check(code) == dim
    estimate = min_distance_sampled(code, trials=20000, seed=d)
    print(f"(5,2,1) d={d}: dimension {dim}, sampled distance upper bound {estimate}")
    assert estimate >= d


@C2
def test_c2_runtime():
    start = time.perf_counter()
    for d in GRID_521:
        assert min_distance_exhaustive(construct_theorem31(2, (5, 2, 1), d), cap=CAP) == d
    assert time.perf_counter() - start <= TIME_LIMIT


# -- 3 ----------------------------------------------------------------------------

C3 = pytest.mark.criterion(3, "cross-field q=3 sizes (2,1), every distance MSRD")


@C3
@pytest.mark.parametrize("d,dim", sorted(GRID_Q3.items()))
def test_c3_ternary(d, dim):
    code, rep = _verified(3, (2, 1), d, lambda: construct_theorem21(3, 2, 1, d))
    assert code.size <= 3**5
    assert rep.dimension == dim and rep.defect == 0 and rep.distance == d and rep.msrd


# -- 4 ----------------------------------------------------------------------------

C4 = pytest.mark.criterion(4, "Gabidulin codes over GF(2^3) are MRD")


@C4
@pytest.mark.parametrize("k", [1, 2, 3])
def test_c4_gabidulin(k):
    shape = CodeShape.build(2, (3,))
    basis = tuple(SumRankVector(shape, (f,)) for f in gabidulin_basis(shape.contexts[0], k))
    code = LinearSumRankCode(shape, basis, 3 - k + 1)
    assert min_distance_exhaustive(code) == 3 - k + 1
    assert is_msrd(code).msrd


# -- 5 ----------------------------------------------------------------------------

C5 = pytest.mark.criterion(5, "property suites")

CONTEXTS = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (4, 2), (2, 1)]


@C5
@pytest.mark.parametrize("q,n", CONTEXTS)
def test_c5_field_and_frobenius(q, n):
    ctx = make_extension(make_field(q), n)
    rng = np.random.default_rng(q * 100 + n)
    for _ in range(200):
        x, y, z = (ctx.random_element(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z and x * y == y * x and x + y == y + x
        assert x + ctx.zero() == x and x * ctx.one() == x and x - x == ctx.zero()
        if x:
            assert x * x.inverse() == ctx.one()
        assert (x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1)
        assert (x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1)
        assert x.frobenius(n) == x


@C5
@pytest.mark.parametrize("q,n", CONTEXTS)
def test_c5_eval_matrix_consistency(q, n):
    ctx = make_extension(make_field(q), n)
    rng = np.random.default_rng(7 * q + n)
    for _ in range(200):
        f = QPoly(ctx, tuple(ctx.random_element(rng) for _ in range(n)))
        x = ctx.random_element(rng)
        assert qpoly_eval(f, x).coords == to_matrix(f).matvec(x.coords)


@C5
@pytest.mark.parametrize("q,sizes", [(2, (4, 2)), (2, (5, 2, 1)), (3, (2, 1))])
def test_c5_metric_axioms(q, sizes):
    shape = CodeShape.build(q, sizes)
    rng = np.random.default_rng(sum(sizes))

    def rand():
        return SumRankVector(shape, tuple(
            QPoly(c, tuple(c.random_element(rng) if rng.random() < 0.5 else c.zero() for _ in range(c.n)))
            for c in shape.contexts
        ))

    for _ in range(100):
        x, y, z = rand(), rand(), rand()
        dxy = sum_rank_distance(x, y)
        assert 0 <= dxy <= shape.N
        assert (dxy == 0) == (x == y)
        assert dxy == sum_rank_distance(y, x)
        assert sum_rank_distance(x, z) <= dxy + sum_rank_distance(y, z)


def _grid_instances():
    yield from ((2, (4, 2), d) for d in GRID_42)
    yield from ((2, (5, 2, 1), d) for d in list(GRID_521) + list(GRID_521_LARGE))
    yield from ((3, (2, 1), d) for d in GRID_Q3)


@C5
@pytest.mark.parametrize("q,sizes,d", list(_grid_instances()))
def test_c5_direct_sum_certificates(q, sizes, d):
    c = build_construction(q, sizes, d)
    for dec in c.decompositions():
        assert dec.certificate()
        assert sum(dec.dims) <= dec.ambient.n


@C5
@pytest.mark.parametrize("q,sizes,d", [(2, (4, 2), 2), (2, (5, 2, 1), 4), (3, (2, 1), 1)])
def test_c5_parallel_determinism(q, sizes, d):
    code = construct_theorem31(q, sizes, d)
    serial = (min_distance_exhaustive(code, workers=1), weight_distribution(code, workers=1))
    parallel = (
        min_distance_exhaustive(code, workers=4, chunk=777),
        weight_distribution(code, workers=4, chunk=777),
    )
    assert serial == parallel


# -- 6 ----------------------------------------------------------------------------

C6 = pytest.mark.criterion(6, "negative controls")


@C6
def test_c6_three_two_rejected():
    for d in range(1, 6):
        with pytest.raises(IneligibleParameters):
            construct_theorem21(2, 3, 2, d)


def _exact_grid():
    yield from ((2, (4, 2), d) for d in GRID_42)
    yield from ((2, (5, 2, 1), d) for d in GRID_521)
    yield from ((3, (2, 1), d) for d in GRID_Q3)


@C6
@pytest.mark.parametrize("q,sizes,d", list(_exact_grid()))
def test_c6_deleted_generator(q, sizes, d):
    code = construct_theorem31(q, sizes, d)
    idx = code.k // 2
    rep = is_msrd(code.without(idx), cap=CAP)
    assert rep.defect == 1 and not rep.msrd


@C6
def test_c6_no_singleton_violation():
    for q, sizes, d in _exact_grid():
        code, rep = _verified(q, sizes, d, lambda: construct_theorem31(q, sizes, d))
        assert rep.dimension <= singleton_dimension(sizes, rep.distance)
        check_singleton(code, rep.dimension, rep.distance)
