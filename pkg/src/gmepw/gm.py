"""Gushel-Mukai data: validation of the defining quadric diagram, the
ordinary/special/non-lci trichotomy, the canonical splitting of the target
space, rational point sampling on the Grassmannian hull, the opposite
construction, and discriminant polynomials along lines.

Coordinates are fixed once: the 6-space has basis e1..e6, the distinguished
hyperplane is spanned by e1..e5, and the line element is the coefficient of
e6.  The degree-2 monomials of the 5-space are ordered 12 < 13 < ... < 45.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import (
    MultiVector,
    monomial_index,
    vector_to_multivector,
    wedge,
)
from .linalg import Matrix, Subspace, kernel, unit_vector, vec
from .polynomials import Poly, interpolate
from .quadrics import QuadricOnSubspace
from .sampling import random_nonzero_vector, rng_from_seed

V5_DIM = 5
L2V5_DIM = 10  # degree-2 monomials of the 5-space


class GmError(ValueError):
    """Mathematically invalid input to a construction."""


@dataclass(frozen=True)
class GMData:
    """The tuple (W, V6, V5, L, mu, q, epsilon) in fixed coordinates.

    W is k^(n+5); mu maps W into the degree-2 power of the 5-space
    (10 x (n+5) matrix over the monomial rows); q is one symmetric matrix
    per basis vector of the 6-space; epsilon scales the determinant
    trivialization of the 5-space.
    """

    n: int
    mu: Matrix
    q: tuple[Matrix, ...]
    epsilon: Fraction = Fraction(1)

    def __post_init__(self):
        w = self.n + 5
        if self.mu.rows != L2V5_DIM or self.mu.cols != w:
            raise GmError(f"mu must be 10 x {w}")
        if len(self.q) != 6:
            raise GmError("q must consist of six symmetric matrices")
        for m in self.q:
            if m.rows != w or m.cols != w:
                raise GmError(f"each q matrix must be {w} x {w}")
        if self.epsilon == 0:
            raise GmError("epsilon must be invertible")

    @property
    def w_dim(self) -> int:
        return self.n + 5

    def q_of(self, v) -> Matrix:
        """The symmetric matrix of the quadric at a vector of the 6-space."""
        v = vec(v)
        if len(v) != 6:
            raise GmError("quadric direction must lie in the 6-space")
        acc = Matrix.zero(self.w_dim, self.w_dim)
        for c, m in zip(v, self.q):
            if c != 0:
                acc = acc + m.scale(c)
        return acc

    def mu_of(self, w) -> MultiVector:
        """Image of a W-vector as a degree-2 form on the 5-space."""
        return MultiVector.from_coords(5, 2, self.mu.apply(vec(w)))

    def ker_mu(self) -> Subspace:
        return kernel(self.mu)


GMTypeTag = str  # "ordinary" | "special" | "non_lci"

ORDINARY = "ordinary"
SPECIAL = "special"
NON_LCI = "non_lci"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    gm_type: GMTypeTag | None
    message: str = ""
    witness: tuple | None = None


def plucker_value(epsilon: Fraction, v, beta1: MultiVector, beta2: MultiVector) -> Fraction:
    """epsilon times the top 5-space coefficient of v ^ beta1 ^ beta2.

    Only the hyperplane component of v contributes, so a full 6-vector may be
    passed directly.
    """
    v = vec(v)
    if len(v) == 5:
        v = v + [Fraction(0)]
    prod = wedge(vector_to_multivector(v), wedge(_inject2(beta1), _inject2(beta2)))
    top = monomial_index(6, 5)[(0, 1, 2, 3, 4)]
    return epsilon * prod.coords[top]


def _inject2(beta: MultiVector) -> MultiVector:
    from .exterior import inject

    return inject(beta, 6) if beta.basis.ambient_dim == 5 else beta


def plucker_gram(mu: Matrix, i: int, epsilon: Fraction) -> Matrix:
    """Gram of the Pluecker quadric at basis vector e_(i+1) of the 5-space."""
    w = mu.cols
    cols = [MultiVector.from_coords(5, 2, mu.col(j)) for j in range(w)]
    ei = unit_vector(6, i)
    g = Matrix.zero(w, w)
    for a in range(w):
        for b in range(a, w):
            val = plucker_value(epsilon, ei, cols[a], cols[b])
            g.data[a][b] = val
            g.data[b][a] = val
    return g


def validate(d: GMData) -> ValidationReport:
    """Check the defining identities exactly and classify the data.

    The first violated identity is reported with the offending direction and
    pair of W-basis indices.
    """
    for i, m in enumerate(d.q):
        if not m.is_symmetric():
            return ValidationReport(False, None, f"q(e{i+1}) is not symmetric")
    cols = [MultiVector.from_coords(5, 2, d.mu.col(j)) for j in range(d.w_dim)]
    for i in range(5):
        ei = unit_vector(6, i)
        for a in range(d.w_dim):
            for b in range(a, d.w_dim):
                expected = plucker_value(d.epsilon, ei, cols[a], cols[b])
                if d.q[i].data[a][b] != expected:
                    return ValidationReport(
                        False,
                        None,
                        f"q(e{i+1})(w{a+1}, w{b+1}) violates the wedge identity",
                        witness=(i, a, b),
                    )
    return ValidationReport(True, classify(d))


def classify(d: GMData) -> GMTypeTag:
    """ordinary / special / non_lci according to the kernel of mu."""
    ker = d.ker_mu()
    if ker.dim == 0:
        return ORDINARY
    if ker.dim > 1:
        return NON_LCI
    w1 = ker.basis_rows()[0]
    # the value at the kernel point depends on v only through its e6 part,
    # verified here on two independent directions off the hyperplane
    vals = []
    for v in (unit_vector(6, 5), vec([1, 0, 0, 0, 0, 1])):
        g = d.q_of(v)
        vals.append(sum(
            (w1[a] * g.data[a][b] * w1[b] for a in range(d.w_dim) for b in range(d.w_dim)),
            Fraction(0),
        ))
    if vals[0] != vals[1]:
        raise GmError("inconsistent kernel values; data violates the wedge identity")
    return SPECIAL if vals[0] != 0 else NON_LCI


def split_w(d: GMData) -> tuple[Subspace, Subspace, tuple[Matrix, ...], tuple[Matrix, ...]]:
    """Canonical splitting of W into the kernel line and its q-orthogonal.

    Only defined for lci data.  Returns (W0, W1, q0, q1) with the q blocks
    written on the RREF bases of the two summands.  The splitting does not
    depend on the choice of the direction off the hyperplane; this is checked
    for two choices.
    """
    t = classify(d)
    if t == NON_LCI:
        raise GmError("splitting needs lci data")
    w1 = d.ker_mu()
    if w1.dim == 0:
        w0 = Subspace.full(d.w_dim)
        q0 = tuple(m for m in d.q)
        return w0, w1, q0, tuple(Matrix.zero(0, 0) for _ in d.q)
    k = w1.basis_rows()[0]
    w0s = []
    for v in (unit_vector(6, 5), vec([1, 0, 0, 0, 0, 1])):
        g = d.q_of(v)
        functional = Matrix([g.apply(k)])
        w0s.append(kernel(functional))
    if w0s[0] != w0s[1]:
        raise GmError("splitting depends on the direction; data is inconsistent")
    w0 = w0s[0]
    q0 = tuple(_restrict_gram(m, w0) for m in d.q)
    q1 = tuple(_restrict_gram(m, w1) for m in d.q)
    return w0, w1, q0, q1


def _restrict_gram(g: Matrix, s: Subspace) -> Matrix:
    rows = s.basis_rows()
    return Matrix(
        [[sum((x[i] * g.data[i][j] * y[j] for i in range(g.rows) for j in range(g.cols)),
              Fraction(0)) for y in rows] for x in rows],
        cols=len(rows),
    )


def quadric_at(d: GMData, v) -> QuadricOnSubspace:
    """The quadric at a direction of the 6-space, on the full projective span."""
    return QuadricOnSubspace(d.w_dim, Subspace.full(d.w_dim), d.q_of(v))


def membership(d: GMData, w) -> str:
    """Position of a point of P(W): on_x, on_hull_only, or off."""
    w = vec(w)
    if all(x == 0 for x in w):
        raise GmError("the zero vector is not a point")
    vals = []
    for i in range(6):
        g = d.q[i]
        vals.append(sum(
            (w[a] * g.data[a][b] * w[b] for a in range(d.w_dim) for b in range(d.w_dim)),
            Fraction(0),
        ))
    if all(v == 0 for v in vals):
        return "on_x"
    if all(v == 0 for v in vals[:5]):
        return "on_hull_only"
    return "off"


def tangent_codim_at(d: GMData, w) -> int:
    """Rank of the six gradient rows at a point; 4 certifies a smooth point."""
    w = vec(w)
    if all(x == 0 for x in w):
        raise GmError("the zero vector is not a point")
    grad = Matrix([d.q[i].apply(w) for i in range(6)])
    return grad.rank()


def hull_point_sample(d: GMData, seed) -> list[Fraction]:
    """A rational point of the Grassmannian hull.

    Picks a random vector v1 of the 5-space, solves the linear condition
    v1 ^ v2 in mu(W) for an independent v2, and returns a W-point mapping to
    v1 ^ v2.  Such a point satisfies every hyperplane quadric exactly.
    Directions with no solution are resampled.
    """
    if classify(d) == NON_LCI:
        raise GmError("sampling needs lci data")
    rng = rng_from_seed(seed)
    mu_image = Subspace.from_rows(L2V5_DIM, [d.mu.col(j) for j in range(d.w_dim)])
    ann = mu_image.annihilator().basis  # functionals cutting mu(W)
    for _ in range(100):
        v1 = random_nonzero_vector(rng, 5, 4)
        mv1 = MultiVector.from_coords(5, 1, v1)
        # linear map v2 -> functionals of v1 ^ v2
        cols = []
        for j in range(5):
            wj = wedge(mv1, MultiVector.from_monomial(5, (j,)))
            cols.append(ann.apply(wj.coords) if ann.rows else [])
        mat = Matrix.from_cols(cols) if ann.rows else Matrix.zero(0, 5)
        sol = kernel(mat)
        # want a kernel vector independent of v1
        v1_line = Subspace.from_rows(5, [v1])
        candidate = None
        for row in sol.basis_rows():
            if not v1_line.contains(row):
                candidate = row
                break
        if candidate is None:
            continue
        target = wedge(mv1, MultiVector.from_coords(5, 1, candidate))
        if target.is_zero():
            continue
        w = d.mu.solve(target.coords)
        if w is None:
            continue
        return w
    raise GmError("hull sampling failed after 100 attempts")


def opposite(d: GMData) -> GMData:
    """Swap ordinary and special data.

    Ordinary data gains a one-dimensional summand carrying the fixed
    representative (coefficient 1) of the quadratic form induced by the e6
    coordinate; special data drops its kernel summand.  Applying the
    operation twice returns the original data for the fixed representative.
    """
    t = classify(d)
    if t == NON_LCI:
        raise GmError("opposite needs lci data")
    w = d.w_dim
    if t == ORDINARY:
        mu = Matrix([row + [Fraction(0)] for row in d.mu.copy_data()])
        qs = []
        for i, m in enumerate(d.q):
            block = [row + [Fraction(0)] for row in m.copy_data()]
            extra = [Fraction(0)] * w + [Fraction(1) if i == 5 else Fraction(0)]
            block.append(extra)
            qs.append(Matrix(block))
        return GMData(n=d.n + 1, mu=mu, q=tuple(qs), epsilon=d.epsilon)
    if d.n < 2:
        raise GmError("special input must have dimension at least 2")
    w0, _w1, q0, _q1 = split_w(d)
    mu = Matrix.from_cols([d.mu.apply(row) for row in w0.basis_rows()])
    return GMData(n=d.n - 1, mu=mu, q=q0, epsilon=d.epsilon)


@dataclass(frozen=True)
class DiscriminantLine:
    """Determinant of the quadric family along a line, and its reduced form."""

    det_poly: Poly
    plucker_mult: int
    dis_poly: Poly | None
    dis_is_everything: bool = False
    mult_exceeds_expected: bool = False


def discriminant_on_line(d: GMData, v_a, v_b) -> DiscriminantLine:
    """det of the Gram family along v_a + t v_b, divided by the hyperplane factor.

    The determinant has degree at most dim W; the coefficient of e6 along the
    line enters with multiplicity at least n - 1 and is divided out exactly.
    A quotient of degree at most 6 remains whenever the determinant is not
    identically zero.
    """
    v_a, v_b = vec(v_a), vec(v_b)
    lam = Poly([v_a[5], v_b[5]])
    if lam.is_zero():
        raise GmError("line lies inside the hyperplane")
    w = d.w_dim
    nodes = range(w + 1)
    pts = []
    for t in nodes:
        v = [a + t * b for a, b in zip(v_a, v_b)]
        pts.append((t, d.q_of(v).det()))
    det_poly = interpolate(pts)
    if det_poly.is_zero():
        return DiscriminantLine(det_poly, 0, None, dis_is_everything=True)
    if lam.degree == 1:
        t0 = -lam.coeffs[0] / lam.coeffs[1]
        mult = det_poly.root_multiplicity(t0)
    else:
        # the hyperplane is met at infinity; multiplicity is the degree drop
        mult = w - det_poly.degree
    expected = d.n - 1
    if mult < expected:
        raise GmError("determinant is not divisible by the expected hyperplane power")
    dis = det_poly
    for _ in range(expected):
        dis = dis.exact_div(lam)
    return DiscriminantLine(
        det_poly,
        mult,
        dis,
        mult_exceeds_expected=mult > expected,
    )


def canonical_ordinary(
    mu_image: Subspace, q_matrices: tuple[Matrix, ...], epsilon=Fraction(1)
) -> GMData:
    """Ordinary data with W realized as a canonical subspace of the 2-forms."""
    mu = Matrix.from_cols(mu_image.basis_rows())
    return GMData(n=mu_image.dim - 5, mu=mu, q=q_matrices, epsilon=epsilon)
