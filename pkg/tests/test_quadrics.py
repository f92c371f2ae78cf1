"""The Lagrangian-quadric correspondence and isotropic reduction."""

from fractions import Fraction

import pytest

from gmepw.exterior import wedge_symplectic_space
from gmepw.linalg import Matrix, Subspace, kernel
from gmepw.quadrics import (
    LagrangianDecomposition,
    QuadricOnSubspace,
    dual_quadric_via_pairing,
    gram_on_lagrangian,
    is_lagrangian,
    isotropic_reduce,
    lagrangian_from_quadric,
    omega_orthogonal,
    quadric_pair_from_lagrangian,
    standard_doubled_space,
)
from gmepw.sampling import (
    random_lagrangian,
    random_vector,
    rng_from_seed,
    standard_lagrangian_pair,
)


def kernel_lift(dec, a):
    g = gram_on_lagrangian(dec, a)
    rows = [a.basis.left_apply(r) for r in kernel(g).basis.data]
    return Subspace.from_rows(dec.space.total_dim, rows)


def test_explicit_dim4_example():
    # L1 = span(f1, f2), L2 = span(f1*, f2*), A = span(f1 + f1*, f2)
    dec = standard_doubled_space(2)
    a = Subspace.from_rows(4, [[1, 0, 1, 0], [0, 1, 0, 0]])
    assert is_lagrangian(dec.space, a)
    g = gram_on_lagrangian(dec, a)
    assert g == Matrix([[1, 0], [0, 0]])
    assert kernel_lift(dec, a) == Subspace.from_rows(4, [[0, 1, 0, 0]])
    assert kernel_lift(dec, a) == a.intersect(dec.l1) + a.intersect(dec.l2)


def test_degenerate_lagrangian_a_equals_l1():
    dec = standard_doubled_space(3)
    q1, q2 = quadric_pair_from_lagrangian(dec, dec.l1)
    assert q1.span == dec.l1
    assert q1.gram.is_zero()
    assert q2.span.dim == 0
    assert q1.kernel_subspace() == dec.l1


@pytest.mark.parametrize("m", [2, 3, 4])
def test_random_lagrangians_symmetry_kernel_duality(m):
    rng = rng_from_seed(100 + m)
    dec = standard_doubled_space(m)
    for _ in range(25):
        a = random_lagrangian(dec.space, rng)
        g = gram_on_lagrangian(dec, a)
        assert g.is_symmetric()
        assert kernel_lift(dec, a) == a.intersect(dec.l1) + a.intersect(dec.l2)
        q1, q2 = quadric_pair_from_lagrangian(dec, a)
        assert q1.span == omega_orthogonal(dec.space, a.intersect(dec.l2)).intersect(dec.l1)
        assert q2.span == omega_orthogonal(dec.space, a.intersect(dec.l1)).intersect(dec.l2)
        assert q1.kernel_subspace() == a.intersect(dec.l1)
        assert q2.kernel_subspace() == a.intersect(dec.l2)
        d2 = dual_quadric_via_pairing(dec, q1, 1)
        assert d2.span == q2.span and d2.gram == q2.gram
        d1 = dual_quadric_via_pairing(dec, q2, 2)
        assert d1.span == q1.span and d1.gram == q1.gram


def test_wedge_space_decomposition_symmetry():
    # the same checks on the 20-dimensional wedge form with a natural split
    rng = rng_from_seed(77)
    space = wedge_symplectic_space()
    dec = standard_lagrangian_pair(space)
    for _ in range(5):
        a = random_lagrangian(space, rng)
        g = gram_on_lagrangian(dec, a)
        assert g.is_symmetric()
        assert kernel_lift(dec, a) == a.intersect(dec.l1) + a.intersect(dec.l2)


def test_lagrangian_from_quadric_examples():
    # q(x) = x1^2 on the full plane
    q = QuadricOnSubspace(2, Subspace.full(2), Matrix([[1, 0], [0, 0]]))
    a = lagrangian_from_quadric(q)
    assert a == Subspace.from_rows(4, [[1, 0, 1, 0], [0, 1, 0, 0]])
    # zero form on the zero span: the pure annihilator
    q0 = QuadricOnSubspace(2, Subspace.zero(2), Matrix.zero(0, 0))
    a0 = lagrangian_from_quadric(q0)
    assert a0 == Subspace.from_rows(4, [[0, 0, 1, 0], [0, 0, 0, 1]])


@pytest.mark.parametrize("m", [2, 3, 4])
def test_roundtrip_quadric_to_lagrangian_and_back(m):
    rng = rng_from_seed(200 + m)
    dec = standard_doubled_space(m)
    for _ in range(20):
        # quadrics of every span dimension and rank
        span_rows = [random_vector(rng, m, 3) for _ in range(rng.randint(0, m))]
        span = Subspace.from_rows(m, span_rows)
        d = span.dim
        g0 = Matrix([[Fraction(rng.randint(-4, 4)) for _ in range(d)] for _ in range(d)])
        gram = Matrix([[g0.data[i][j] + g0.data[j][i] for j in range(d)] for i in range(d)])
        q = QuadricOnSubspace(m, span, gram)
        a = lagrangian_from_quadric(q)
        assert is_lagrangian(dec.space, a)
        p1, p2 = quadric_pair_from_lagrangian(dec, a)
        # p1 lives on l1 = first block; compare through the embedding
        assert [row[:m] for row in p1.span.basis_rows()] == span.basis_rows() or (
            p1.span.dim == 0 and span.dim == 0
        )
        assert p1.gram == gram


def test_roundtrip_lagrangian_to_quadric_and_back():
    rng = rng_from_seed(303)
    dec = standard_doubled_space(3)
    for _ in range(20):
        a = random_lagrangian(dec.space, rng)
        q1, _ = quadric_pair_from_lagrangian(dec, a)
        small_span = Subspace.from_rows(3, [r[:3] for r in q1.span.basis_rows()])
        q = QuadricOnSubspace(3, small_span, q1.gram)
        assert lagrangian_from_quadric(q) == a


def test_isotropic_reduce_identity_and_full():
    rng = rng_from_seed(404)
    dec = standard_doubled_space(3)
    a = random_lagrangian(dec.space, rng)
    red0 = isotropic_reduce(dec, a, Subspace.zero(6))
    assert red0.reduced.space.total_dim == 6
    assert red0.reduced_a.dim == a.dim
    redf = isotropic_reduce(dec, a, dec.l1)
    assert redf.reduced.space.total_dim == 0
    assert redf.reduced_a.dim == 0


def test_isotropic_reduce_requires_containment():
    dec = standard_doubled_space(2)
    rng = rng_from_seed(1)
    a = random_lagrangian(dec.space, rng)
    with pytest.raises(ValueError):
        isotropic_reduce(dec, a, dec.l2)


@pytest.mark.parametrize("m", [3, 4])
def test_isotropic_reduce_formulas_and_restriction(m):
    rng = rng_from_seed(500 + m)
    dec = standard_doubled_space(m)
    for _ in range(20):
        a = random_lagrangian(dec.space, rng)
        idim = rng.randint(1, m - 1)
        rows = [random_vector(rng, m, 3) + [Fraction(0)] * m for _ in range(idim)]
        iso = Subspace.from_rows(2 * m, rows)
        red = isotropic_reduce(dec, a, iso)
        assert is_lagrangian(red.reduced.space, red.reduced_a)
        rq1, rq2 = quadric_pair_from_lagrangian(red.reduced, red.reduced_a)
        assert rq2.span == red.span_formula
        assert rq2.kernel_subspace() == red.kernel_formula
        # independent oracle: restrict the big second quadric directly
        q1, q2 = quadric_pair_from_lagrangian(dec, a)
        for r1 in rq2.span.basis_rows():
            for r2 in rq2.span.basis_rows():
                lift1, lift2 = red.model.lift(r1), red.model.lift(r2)
                if q2.span.contains(lift1) and q2.span.contains(lift2):
                    assert q2.evaluate(lift1, lift2) == rq2.evaluate(r1, r2)


def test_reduction_recovers_l2bar_orthogonal():
    # choosing the isotropic as l1 meet the orthogonal of a chosen subspace of
    # l2 realizes the restriction to that subspace
    rng = rng_from_seed(606)
    dec = standard_doubled_space(4)
    a = random_lagrangian(dec.space, rng)
    l2bar_rows = [dec.l2.basis_rows()[i] for i in (0, 2)]
    l2bar = Subspace.from_rows(8, l2bar_rows)
    iso = dec.l1.intersect(omega_orthogonal(dec.space, l2bar))
    red = isotropic_reduce(dec, a, iso)
    # the reduced l2 is the projection of l2bar
    assert red.reduced.l2 == red.model.project_subspace(l2bar)
    assert dec.l2.intersect(omega_orthogonal(dec.space, iso)) == l2bar


def test_quadric_on_subspace_validation():
    with pytest.raises(ValueError):
        QuadricOnSubspace(3, Subspace.full(3), Matrix([[1, 2], [2, 1]]))
    with pytest.raises(ValueError):
        QuadricOnSubspace(3, Subspace.full(3), Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]))


def test_decomposition_validation():
    dec = standard_doubled_space(2)
    with pytest.raises(ValueError):
        LagrangianDecomposition(dec.space, dec.l1, dec.l1)
    bad = Subspace.from_rows(4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    with pytest.raises(ValueError):
        LagrangianDecomposition(dec.space, bad, dec.l2)
