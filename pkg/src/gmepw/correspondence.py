"""The bidirectional dictionary between lci Gushel-Mukai data and extended
Lagrangian data, the dimension formula, hyperplane-section updates, and the
duality on Lagrangian subspaces.

The ambient of the extended construction is the 22-dimensional graded space
(degree-3 forms) + (k + L) with symplectic form

    omega((xi, x, x'), (eta, y, y')) = top(xi ^ eta) + y x' - x y',

coordinates 0..19 for the degree-3 monomials, 20 for the k part and 21 for
the L part.  A tag in {"0", "1", "inf"} stores the orbit of the odd summand
under the scaling action; the fixed representative of "1" is the kernel line
appearing for the coefficient-1 special form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exterior import (
    MultiVector,
    SymplecticSpace,
    inject,
    l3v5_subspace,
    l3v6_gram,
    lambda_p,
    monomial_index,
    monomials,
    vector_to_multivector,
    wedge,
    wedge_symplectic_space,
)
from .gm import GmError, GMData, ORDINARY, SPECIAL, classify, split_w
from .linalg import Matrix, Subspace, kernel, unit_vector, vec
from .quadrics import LagrangianDecomposition, is_lagrangian, omega_orthogonal

EXT_DIM = 22
K_COORD = 20
L_COORD = 21

A1_ZERO = "0"
A1_ONE = "1"
A1_INF = "inf"
A1_TAGS = (A1_ZERO, A1_ONE, A1_INF)


class CorrespondenceError(GmError):
    pass


@dataclass(frozen=True)
class LagrangianData:
    """A Lagrangian 10-space of degree-3 forms with the odd orbit tag."""

    a: Subspace
    a1: str = A1_ZERO

    def __post_init__(self):
        if self.a.ambient_dim != 20:
            raise CorrespondenceError("the Lagrangian must live in the 20 coordinates")
        if not is_lagrangian(wedge_symplectic_space(), self.a):
            raise CorrespondenceError("subspace is not Lagrangian for the wedge form")
        if self.a1 not in A1_TAGS:
            raise CorrespondenceError(f"unknown odd tag {self.a1!r}")


@lru_cache(maxsize=None)
def extended_space() -> SymplecticSpace:
    form = Matrix.zero(EXT_DIM, EXT_DIM)
    g = l3v6_gram()
    for i in range(20):
        for j in range(20):
            form.data[i][j] = g.data[i][j]
    form.data[K_COORD][L_COORD] = Fraction(-1)
    form.data[L_COORD][K_COORD] = Fraction(1)
    return SymplecticSpace(EXT_DIM, form)


@lru_cache(maxsize=None)
def extended_decomposition() -> LagrangianDecomposition:
    """Even/odd graded decomposition: (3-forms on the hyperplane + L) and
    (e6 wedge 2-forms + k)."""
    rows1 = []
    for m in monomials(5, 3):
        rows1.append(_ext_unit(monomial_index(6, 3)[m]))
    rows1.append(_ext_unit(L_COORD))
    rows2 = []
    for m in monomials(6, 3):
        if m[-1] == 5:
            rows2.append(_ext_unit(monomial_index(6, 3)[m]))
    rows2.append(_ext_unit(K_COORD))
    return LagrangianDecomposition(
        extended_space(),
        Subspace.from_rows(EXT_DIM, rows1),
        Subspace.from_rows(EXT_DIM, rows2),
    )


def _ext_unit(i: int):
    return unit_vector(EXT_DIM, i)


def a1_representative(tag: str) -> Subspace:
    """The odd Lagrangian line for a tag, in the (k, L) plane."""
    if tag == A1_ZERO:
        return Subspace.from_rows(EXT_DIM, [_ext_unit(L_COORD)])
    if tag == A1_INF:
        return Subspace.from_rows(EXT_DIM, [_ext_unit(K_COORD)])
    row = [Fraction(0)] * EXT_DIM
    row[K_COORD] = Fraction(1)
    row[L_COORD] = Fraction(-1)
    return Subspace.from_rows(EXT_DIM, [row])


def extended_lagrangian(ld: LagrangianData) -> Subspace:
    """The graded Lagrangian inside the 22 coordinates."""
    rows = [list(r) + [Fraction(0), Fraction(0)] for r in ld.a.basis_rows()]
    rows.extend(a1_representative(ld.a1).basis_rows())
    return Subspace.from_rows(EXT_DIM, rows)


def gm_to_lagrangian(d: GMData, check_choice_independence: bool = True) -> LagrangianData:
    """Extract the Lagrangian data of lci GM data.

    Builds the kernel of the defining map on (3-forms on the hyperplane) + L
    + W and embeds it into the 22 coordinates; the result splits along the
    grading into the 10-dimensional even part and the odd line whose orbit is
    the returned tag.  The even part does not depend on the auxiliary
    direction off the hyperplane, which is checked against a second choice.
    """
    t = classify(d)
    if t == "non_lci":
        raise CorrespondenceError("the construction needs lci data")
    _w0, w1, _q0, _q1 = split_w(d)
    mu1 = _mu1_functional(d, w1)
    a_hat = _a_hat(d, mu1, v0=unit_vector(6, 5))
    a_even, a_odd = _split_graded(a_hat)
    if check_choice_independence:
        other = _a_hat(d, mu1, v0=vec([1, 0, 0, 0, 0, 1]))
        if _split_graded(other)[0] != a_even:
            raise CorrespondenceError("even part depends on the auxiliary direction")
    if a_even.dim != 10:
        raise CorrespondenceError("even part has unexpected dimension")
    a20 = Subspace.from_rows(20, [r[:20] for r in a_even.basis_rows()])
    if not is_lagrangian(wedge_symplectic_space(), a20):
        raise CorrespondenceError("constructed subspace is not Lagrangian")
    tag = _odd_tag(a_odd)
    if (tag == A1_ZERO) != (t == ORDINARY):
        raise CorrespondenceError("odd tag disagrees with the data type")
    return LagrangianData(a=a20, a1=tag)


def _mu1_functional(d: GMData, w1: Subspace) -> list[Fraction]:
    """Coordinate functional of the kernel summand (zero for ordinary data)."""
    if w1.dim == 0:
        return [Fraction(0)] * d.w_dim
    k = w1.basis_rows()[0]
    g = d.q_of(unit_vector(6, 5))
    gk = g.apply(k)
    scale = sum((a * b for a, b in zip(gk, k)), Fraction(0))
    # functional w -> q(e6)(k, w) / q(e6)(k, k) restricts to 1 on the generator
    return [x / scale for x in gk]


def _a_hat(d: GMData, mu1: list[Fraction], v0) -> Subspace:
    """Kernel of the defining map, embedded into the 22 coordinates."""
    w = d.w_dim
    v0 = vec(v0)
    lam0 = v0[5]
    if lam0 == 0:
        raise CorrespondenceError("auxiliary direction must avoid the hyperplane")
    qv0 = d.q_of(v0)
    mu_cols = [MultiVector.from_coords(5, 2, d.mu.col(j)) for j in range(w)]
    l3v5 = monomials(5, 3)
    top5 = monomial_index(6, 5)[(0, 1, 2, 3, 4)]
    # columns: 10 three-form coords, one L coord, w W-coords; rows: W functionals
    mat = Matrix.zero(w, 11 + w)
    for col, m in enumerate(l3v5):
        xi = MultiVector.from_monomial(6, m)
        for j in range(w):
            mat.data[j][col] = d.epsilon * wedge(xi, inject(mu_cols[j])).coords[top5]
    for j in range(w):
        mat.data[j][10] = mu1[j]
    for j in range(w):
        for jj in range(w):
            mat.data[j][11 + jj] = qv0.data[jj][j]
    ker = kernel(mat)
    v0_mv = vector_to_multivector(v0)
    rows = []
    for sol in ker.basis_rows():
        xi, xprime, wvec = sol[:10], sol[10], sol[11:]
        three = MultiVector.from_coords(6, 3, _embed_l3v5(xi))
        three = three + wedge(v0_mv, inject(MultiVector.from_coords(5, 2, d.mu.apply(wvec))))
        k_part = lam0 * sum((m * x for m, x in zip(mu1, wvec)), Fraction(0))
        rows.append(three.coords + [k_part, xprime])
    return Subspace.from_rows(EXT_DIM, rows)


def _embed_l3v5(coords10) -> list[Fraction]:
    out = [Fraction(0)] * 20
    idx = monomial_index(6, 3)
    for m, c in zip(monomials(5, 3), coords10):
        out[idx[m]] = c
    return out


def _split_graded(a_hat: Subspace) -> tuple[Subspace, Subspace]:
    even = Subspace.from_rows(
        EXT_DIM, [_ext_unit(i) for i in range(20)]
    )
    odd = Subspace.from_rows(EXT_DIM, [_ext_unit(K_COORD), _ext_unit(L_COORD)])
    a_even = a_hat.intersect(even)
    a_odd = a_hat.intersect(odd)
    if a_even.dim + a_odd.dim != a_hat.dim:
        raise CorrespondenceError("kernel does not split along the grading")
    return a_even, a_odd


def _odd_tag(a_odd: Subspace) -> str:
    if a_odd.dim != 1:
        raise CorrespondenceError("odd part must be a line")
    row = a_odd.basis_rows()[0]
    x, xprime = row[K_COORD], row[L_COORD]
    if x == 0:
        return A1_ZERO
    if xprime == 0:
        return A1_INF
    return A1_ONE


def lagrangian_to_gm(ld: LagrangianData) -> GMData:
    """Build GM data from Lagrangian data with tag 0 or 1.

    The image of the contraction on the Lagrangian is the even target space;
    the quadric family comes from the contraction formula, whose symmetry on
    every direction is asserted.  Tag 1 appends the one-dimensional summand
    with the fixed coefficient-1 form.
    """
    if ld.a1 == A1_INF:
        raise CorrespondenceError("the cone tag does not produce lci data")
    lifts, w0 = _contraction_image_with_lifts(ld.a)
    n0 = w0.dim - 5
    grams = []
    for i in range(6):
        g = _qtilde0_gram(i, lifts)
        if not g.is_symmetric():
            raise CorrespondenceError("induced quadric family is not symmetric")
        grams.append(g)
    if ld.a1 == A1_ZERO:
        mu = Matrix.from_cols(w0.basis_rows()) if w0.dim else Matrix.zero(10, 0)
        return GMData(n=n0, mu=mu, q=tuple(grams), epsilon=Fraction(1))
    mu = Matrix([row + [Fraction(0)] for row in Matrix.from_cols(w0.basis_rows()).copy_data()],
                cols=w0.dim + 1)
    qs = []
    for i, g in enumerate(grams):
        block = [row + [Fraction(0)] for row in g.copy_data()]
        block.append([Fraction(0)] * w0.dim + [Fraction(1) if i == 5 else Fraction(0)])
        qs.append(Matrix(block))
    return GMData(n=n0 + 1, mu=mu, q=tuple(qs), epsilon=Fraction(1))


def _contraction_image_with_lifts(a: Subspace) -> tuple[list[MultiVector], Subspace]:
    """RREF basis of the contraction image and lifts of it inside the Lagrangian."""
    rows = a.basis_rows()
    imgs = [lambda_p(MultiVector.from_coords(6, 3, r)) for r in rows]
    w0 = Subspace.from_rows(10, [m.coords for m in imgs])
    proj = Matrix.from_cols([m.coords for m in imgs]) if rows else Matrix.zero(10, 0)
    lifts = []
    for target in w0.basis_rows():
        c = proj.solve(list(target))
        if c is None:
            raise CorrespondenceError("contraction lift failed")
        lifts.append(MultiVector.from_coords(6, 3, a.basis.left_apply(c)))
    return lifts, w0


def _qtilde0_gram(i: int, lifts: list[MultiVector]) -> Matrix:
    """Gram of the form -top(contract(v ^ xi1) ^ contract(xi2)) at basis vector i."""
    ei = MultiVector.from_monomial(6, (i,))
    m = len(lifts)
    top5 = monomial_index(5, 5)[(0, 1, 2, 3, 4)]
    left = [lambda_p(wedge(ei, xi)) for xi in lifts]
    right = [lambda_p(xi) for xi in lifts]
    g = Matrix.zero(m, m)
    for aa in range(m):
        for bb in range(m):
            prod = wedge(left[aa], right[bb])
            g.data[aa][bb] = -prod.coords[top5]
    return g


@dataclass(frozen=True)
class DimReport:
    dim_a_cap_l3v5: int
    predicted_dim_x: int
    gm_type: str
    degenerate: bool


def dim_report(ld: LagrangianData) -> DimReport:
    """Expected variety dimension from the Lagrangian data."""
    if ld.a1 == A1_INF:
        raise CorrespondenceError("no dimension formula for the cone tag")
    ell = ld.a.intersect(l3v5_subspace()).dim
    base = 5 if ld.a1 == A1_ZERO else 6
    predicted = base - ell
    return DimReport(
        dim_a_cap_l3v5=ell,
        predicted_dim_x=predicted,
        gm_type=ORDINARY if ld.a1 == A1_ZERO else SPECIAL,
        degenerate=predicted < 1,
    )


def dualize(ld: LagrangianData) -> LagrangianData:
    """The orthogonal Lagrangian in the dual coordinates.

    The pairing identifies degree-3 forms on the dual space with functionals
    on degree-3 forms via dual monomials, so the orthogonal is the plain
    annihilator of the coordinate rows.  An involution.
    """
    return LagrangianData(a=ld.a.annihilator(), a1=ld.a1)


def hyperplane_section_lagrangian(a: Subspace, eta0: MultiVector) -> Subspace:
    """Lagrangian of a hyperplane section: meet the orthogonal of the chosen
    3-form on the hyperplane, then adjoin it.

    Fixed point when the form already lies in the subspace; the result always
    meets the input in dimension at least 9.
    """
    if eta0.basis.ambient_dim == 5:
        eta0 = inject(eta0)
    if eta0.is_zero():
        raise CorrespondenceError("the update form must be non-zero")
    if not l3v5_subspace().contains(eta0.coords):
        raise CorrespondenceError("the update form must avoid the e6 coordinate")
    if a.contains(eta0.coords):
        return a
    space = wedge_symplectic_space()
    eta_line = Subspace.from_rows(20, [eta0.coords])
    meet = a.intersect(omega_orthogonal(space, eta_line))
    out = meet + eta_line
    if not is_lagrangian(space, out):
        raise CorrespondenceError("hyperplane update failed to stay Lagrangian")
    return out


def apply_frame(a: Subspace, frame: Matrix) -> Subspace:
    """Transport a Lagrangian through a change of basis of the 6-space."""
    from .exterior import exterior_power_matrix

    if frame.rows != 6 or frame.cols != 6 or frame.det() == 0:
        raise CorrespondenceError("frame must be an invertible 6 x 6 matrix")
    m = exterior_power_matrix(frame, 3)
    return Subspace.from_rows(20, [m.apply(r) for r in a.basis_rows()])
