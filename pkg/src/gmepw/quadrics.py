"""Lagrangian subspaces of a decomposed symplectic space, the associated
projectively dual pairs of quadrics, and isotropic reduction.

A quadric is a subvariety of a (possibly empty) linear subspace P(W) of the
ambient projective space, defined by a (possibly zero) symmetric form on W.
Spans are stored as canonical subspaces of the symplectic coordinate space
and Gram matrices refer to the RREF basis of the span.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import SymplecticSpace
from .linalg import Matrix, Subspace, kernel, solve_multi


def is_isotropic(space: SymplecticSpace, s: Subspace) -> bool:
    b = s.basis
    return (b * space.form * b.transpose()).is_zero()


def is_lagrangian(space: SymplecticSpace, s: Subspace) -> bool:
    return 2 * s.dim == space.total_dim and is_isotropic(space, s)


def omega_orthogonal(space: SymplecticSpace, s: Subspace) -> Subspace:
    """The symplectic orthogonal of a subspace."""
    if s.dim == 0:
        return Subspace.full(space.total_dim)
    return kernel(s.basis * space.form)


@dataclass(frozen=True)
class LagrangianDecomposition:
    """A symplectic space written as a direct sum of two Lagrangians."""

    space: SymplecticSpace
    l1: Subspace
    l2: Subspace

    def __post_init__(self):
        n = self.space.total_dim
        if self.l1.ambient_dim != n or self.l2.ambient_dim != n:
            raise ValueError("ambient mismatch")
        if not (is_lagrangian(self.space, self.l1) and is_lagrangian(self.space, self.l2)):
            raise ValueError("summands are not Lagrangian")
        if self.l1.intersect(self.l2).dim != 0:
            raise ValueError("summands are not complementary")
        object.__setattr__(self, "_tinv", None)

    def _transition_inverse(self) -> Matrix:
        """Inverse of the stacked-basis matrix; rows of the original stack are
        the two bases, so right-multiplying by the inverse yields coefficients."""
        cached = getattr(self, "_tinv")
        if cached is None:
            cached = self.l1.basis.vstack(self.l2.basis).inverse()
            object.__setattr__(self, "_tinv", cached)
        return cached

    def project(self, v) -> tuple[list[Fraction], list[Fraction]]:
        """Components of v along l1 and l2."""
        p1, p2 = self.project_rows(Matrix([list(v)]))
        return p1.row(0), p2.row(0)

    def project_rows(self, m: Matrix) -> tuple[Matrix, Matrix]:
        """Componentwise projection of each row of a matrix."""
        tinv = self._transition_inverse()
        coeffs = m * tinv
        d1 = self.l1.dim
        c1 = coeffs.submatrix(range(m.rows), range(d1))
        c2 = coeffs.submatrix(range(m.rows), range(d1, self.space.total_dim))
        return c1 * self.l1.basis, c2 * self.l2.basis


@dataclass(frozen=True)
class QuadricOnSubspace:
    """A quadric inside P(span) with a symmetric Gram matrix on the span basis."""

    ambient_dim: int
    span: Subspace
    gram: Matrix

    def __post_init__(self):
        if self.span.ambient_dim != self.ambient_dim:
            raise ValueError("span ambient mismatch")
        if self.gram.rows != self.span.dim or self.gram.cols != self.span.dim:
            raise ValueError("Gram size differs from span dimension")
        if not (self.gram.is_symmetric() or self.gram.rows == 0):
            raise ValueError("Gram matrix is not symmetric")

    @property
    def span_dim(self) -> int:
        return self.span.dim

    @property
    def corank(self) -> int:
        return self.span.dim - self.gram.rank()

    @property
    def rank(self) -> int:
        return self.gram.rank()

    def kernel_subspace(self) -> Subspace:
        """Kernel of the form, lifted to ambient coordinates."""
        k = kernel(self.gram)
        return Subspace.from_rows(
            self.ambient_dim, [self.span.basis.left_apply(row) for row in k.basis.data]
        )

    def evaluate(self, v, w=None) -> Fraction:
        """Value q(v, w) for ambient vectors lying in the span."""
        cv = self.span.coordinates_of(v)
        cw = cv if w is None else self.span.coordinates_of(w)
        if cv is None or cw is None:
            raise ValueError("point outside the span of the quadric")
        return sum(
            (cv[i] * self.gram.data[i][j] * cw[j] for i in range(len(cv)) for j in range(len(cw))),
            Fraction(0),
        )

    def restrict_gram_to(self, sub: Subspace) -> Matrix:
        """Gram of the restriction to a subspace of the span, on sub's RREF basis."""
        coords = [self.span.coordinates_of(row) for row in sub.basis.data]
        if any(c is None for c in coords):
            raise ValueError("restriction target is not inside the span")
        m = len(coords)
        return Matrix(
            [
                [
                    sum(
                        (coords[a][i] * self.gram.data[i][j] * coords[b][j]
                         for i in range(self.gram.rows) for j in range(self.gram.cols)),
                        Fraction(0),
                    )
                    for b in range(m)
                ]
                for a in range(m)
            ]
        )


def gram_on_lagrangian(dec: LagrangianDecomposition, a: Subspace) -> Matrix:
    """Gram of the bilinear form omega(pr1 x, pr2 y) on the basis of a."""
    p1, p2 = dec.project_rows(a.basis)
    return p1 * dec.space.form * p2.transpose()


def _induced_quadric(dec: LagrangianDecomposition, a: Subspace, side: int) -> QuadricOnSubspace:
    """Quadric induced on the projection of a to l1 (side=1) or l2 (side=2)."""
    space = dec.space
    projected = dec.project_rows(a.basis)[side - 1]
    w = Subspace.from_rows(space.total_dim, projected.copy_data())
    # lift the RREF basis of w through the projection restricted to a
    coords = solve_multi(projected.transpose(), w.basis_rows())
    if coords is None:
        raise ValueError("projection lift failed")
    gram_a = gram_on_lagrangian(dec, a)
    cmat = Matrix(coords, cols=a.dim)
    gram = cmat * gram_a * cmat.transpose()
    return QuadricOnSubspace(space.total_dim, w, gram)


def quadric_pair_from_lagrangian(
    dec: LagrangianDecomposition, a: Subspace
) -> tuple[QuadricOnSubspace, QuadricOnSubspace]:
    """The projectively dual pair of quadrics cut out by a Lagrangian.

    The first quadric lives on pr1(a) inside l1, the second on pr2(a) inside
    l2; their kernels are a meet l1 and a meet l2.
    """
    if not is_lagrangian(dec.space, a):
        raise ValueError("subspace is not Lagrangian")
    return _induced_quadric(dec, a, 1), _induced_quadric(dec, a, 2)


def pairing_annihilator_in(
    space: SymplecticSpace, s: Subspace, inside: Subspace
) -> Subspace:
    """Vectors of `inside` that are omega-orthogonal to all of s."""
    return omega_orthogonal(space, s).intersect(inside)


def dual_quadric_via_pairing(
    dec: LagrangianDecomposition, q: QuadricOnSubspace, side: int
) -> QuadricOnSubspace:
    """Projective dual of a quadric on one summand, realized on the other.

    The symplectic form restricts to a perfect pairing between l1 and l2;
    the dual of (span W, kernel K, form g) is supported on the annihilator of
    K in the opposite summand, has kernel the annihilator of W, and its form
    is the inverse of g on W/K transported through the pairing.
    """
    space = dec.space
    src, dst = (dec.l1, dec.l2) if side == 1 else (dec.l2, dec.l1)
    if not src.contains_subspace(q.span):
        raise ValueError("quadric does not live on the declared summand")
    kq = q.kernel_subspace()
    dual_span = pairing_annihilator_in(space, kq, dst)
    # reduced form on span/kernel: use span basis rows not in the kernel
    red_idx = []
    probe = kq
    for i, row in enumerate(q.span.basis_rows()):
        cand = probe + Subspace.from_rows(space.total_dim, [row])
        if cand.dim > probe.dim:
            red_idx.append(i)
            probe = cand
    red = q.gram.submatrix(red_idx, red_idx)
    red_inv = red.inverse() if red.rows else red
    reps = [q.span.basis_rows()[i] for i in red_idx]
    gram_rows = []
    for y1 in dual_span.basis_rows():
        phi1 = [space.omega(w, y1) for w in reps]
        row = []
        for y2 in dual_span.basis_rows():
            phi2 = [space.omega(w, y2) for w in reps]
            row.append(
                sum(
                    (phi1[i] * red_inv.data[i][j] * phi2[j]
                     for i in range(len(reps)) for j in range(len(reps))),
                    Fraction(0),
                )
            )
        gram_rows.append(row)
    gram = Matrix(gram_rows) if gram_rows else Matrix.zero(0, 0)
    return QuadricOnSubspace(space.total_dim, dual_span, gram)


def standard_doubled_space(m: int) -> LagrangianDecomposition:
    """k^m plus its dual with the pairing form, decomposed into the two factors."""
    form = Matrix.zero(2 * m, 2 * m)
    for i in range(m):
        form.data[i][m + i] = Fraction(1)
        form.data[m + i][i] = Fraction(-1)
    space = SymplecticSpace(2 * m, form)
    l1 = Subspace.from_rows(2 * m, [_unit(2 * m, i) for i in range(m)])
    l2 = Subspace.from_rows(2 * m, [_unit(2 * m, m + i) for i in range(m)])
    return LagrangianDecomposition(space, l1, l2)


def _unit(n: int, i: int):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def lagrangian_from_quadric(q: QuadricOnSubspace) -> Subspace:
    """The unique Lagrangian in L + L-dual inducing the given quadric on L.

    The quadric lives on L = k^m (ambient_dim = m); the result lives in
    k^(2m) with the standard pairing form, and consists of the graph points
    (x, q(x) mod the annihilator of the span) plus the pure annihilator.
    """
    m = q.ambient_dim
    rows = []
    span_rows = q.span.basis_rows()
    for i, w in enumerate(span_rows):
        functional = [Fraction(0)] * m
        for j, p in enumerate(q.span.pivots):
            functional[p] = q.gram.data[i][j]
        rows.append(w + functional)
    for f in q.span.annihilator().basis_rows():
        rows.append([Fraction(0)] * m + f)
    return Subspace.from_rows(2 * m, rows)


class QuotientModel:
    """Coordinates on U/I for nested subspaces I inside U.

    The complement basis consists of the RREF rows of U whose pivots are not
    pivots of I, which makes the model canonical.
    """

    def __init__(self, inner: Subspace, outer: Subspace):
        if not outer.contains_subspace(inner):
            raise ValueError("inner subspace is not contained in the outer one")
        self.inner = inner
        self.outer = outer
        inner_pivots = set(inner.pivots)
        self.comp_rows = [
            row for row, piv in zip(outer.basis_rows(), outer.pivots) if piv not in inner_pivots
        ]
        self.comp_pivots = [p for p in outer.pivots if p not in inner_pivots]
        self.dim = len(self.comp_rows)

    def project(self, v) -> list[Fraction]:
        """Coordinates of v + I in the complement basis; v must lie in U."""
        if not self.outer.contains(v):
            raise ValueError("vector outside the outer subspace")
        w = list(v)
        for row, piv in zip(self.inner.basis_rows(), self.inner.pivots):
            c = w[piv]
            if c != 0:
                w = [a - c * b for a, b in zip(w, row)]
        return [w[p] for p in self.comp_pivots]

    def project_subspace(self, s: Subspace) -> Subspace:
        inter = s.intersect(self.outer)
        return Subspace.from_rows(self.dim, [self.project(r) for r in inter.basis_rows()])

    def lift(self, coords) -> list[Fraction]:
        out = [Fraction(0)] * self.outer.ambient_dim
        for c, row in zip(coords, self.comp_rows):
            if c != 0:
                out = [a + c * b for a, b in zip(out, row)]
        return out


@dataclass(frozen=True)
class IsotropicReduction:
    """Result of reducing a decomposed space by an isotropic subspace of l1."""

    reduced: LagrangianDecomposition
    reduced_a: Subspace
    span_formula: Subspace
    kernel_formula: Subspace
    model: QuotientModel


def isotropic_reduce(
    dec: LagrangianDecomposition, a: Subspace, iso: Subspace
) -> IsotropicReduction:
    """Pass to I-perp mod I, carrying the Lagrangian a and the decomposition.

    Also returns the closed-form span and kernel of the reduced second
    quadric: the annihilator of (a meet l1)/(a meet I) inside the reduced l2,
    and (a meet (I + reduced l2))/(a meet I).
    """
    space = dec.space
    if not dec.l1.contains_subspace(iso):
        raise ValueError("isotropic subspace must lie in the first summand")
    perp = omega_orthogonal(space, iso)
    model = QuotientModel(iso, perp)
    comp = Matrix(model.comp_rows) if model.comp_rows else Matrix.zero(0, space.total_dim)
    form = comp * space.form * comp.transpose()
    red_space = SymplecticSpace(model.dim, form)
    red_l1 = model.project_subspace(dec.l1)
    l2bar_ambient = dec.l2.intersect(perp)
    red_l2 = model.project_subspace(dec.l2)
    red_dec = LagrangianDecomposition(red_space, red_l1, red_l2)
    red_a = model.project_subspace(a)

    a_l1 = a.intersect(dec.l1)
    a_iso = a.intersect(iso)
    span_f = pairing_annihilator_in(
        red_space, model.project_subspace(a_l1), red_l2
    )
    kern_src = a.intersect(iso + l2bar_ambient)
    kern_f = model.project_subspace(kern_src)
    _ = a_iso
    return IsotropicReduction(red_dec, red_a, span_f, kern_f, model)
