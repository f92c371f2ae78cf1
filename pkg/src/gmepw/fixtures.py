"""Built-in fixtures: trivial Lagrangians, the ordinary fivefold, its special
opposite, an ordinary threefold obtained by two hyperplane updates, and the
fourfold whose Lagrangian contains a fixed rank-4 form (used to hit the
exceptional loci of both fibrations).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .correspondence import (
    A1_ONE,
    A1_ZERO,
    LagrangianData,
    gm_to_lagrangian,
    hyperplane_section_lagrangian,
    lagrangian_to_gm,
)
from .exterior import MultiVector, l3v5_subspace, monomial_index, monomials
from .gm import GMData, opposite, plucker_gram
from .linalg import Matrix, Subspace, unit_vector


@lru_cache(maxsize=None)
def lagrangian_l3v5() -> Subspace:
    """The degree-3 power of the hyperplane: the simplest Lagrangian."""
    return l3v5_subspace()


@lru_cache(maxsize=None)
def lagrangian_e1_wedge() -> Subspace:
    """e1 wedged with all 2-forms; Lagrangian with a fully degenerate stratum."""
    from .exterior import wedge_space

    return wedge_space(
        Subspace.from_rows(6, [unit_vector(6, 0)]), Subspace.full(6)
    )


@lru_cache(maxsize=None)
def fivefold() -> GMData:
    """Ordinary fivefold data: the full 2-form space with the identity form
    in the e6 direction."""
    mu = Matrix.identity(10)
    qs = [plucker_gram(mu, i, Fraction(1)) for i in range(5)]
    qs.append(Matrix.identity(10))
    return GMData(n=5, mu=mu, q=tuple(qs), epsilon=Fraction(1))


@lru_cache(maxsize=None)
def fivefold_lagrangian() -> LagrangianData:
    return gm_to_lagrangian(fivefold())


@lru_cache(maxsize=None)
def sixfold_special() -> GMData:
    return opposite(fivefold())


@lru_cache(maxsize=None)
def threefold_lagrangian() -> LagrangianData:
    """Two hyperplane-section updates of the fivefold Lagrangian."""
    a = fivefold_lagrangian().a
    eta1 = MultiVector.from_monomial(6, (0, 1, 2)) + MultiVector.from_monomial(6, (2, 3, 4))
    a = hyperplane_section_lagrangian(a, eta1)
    eta2 = MultiVector.from_monomial(6, (0, 1, 3)) + MultiVector.from_monomial(6, (1, 2, 4)).scale(2)
    a = hyperplane_section_lagrangian(a, eta2)
    return LagrangianData(a=a, a1=A1_ZERO)


@lru_cache(maxsize=None)
def threefold() -> GMData:
    return lagrangian_to_gm(threefold_lagrangian())


def sigma_form() -> MultiVector:
    """The rank-4 form e123 + e145 with kernel direction e1."""
    return MultiVector.from_monomial(6, (0, 1, 2)) + MultiVector.from_monomial(6, (0, 3, 4))


def _dual_basis_row(i: int) -> list[Fraction]:
    """The e6-block vector pairing to 1 with the i-th 3-monomial of the
    hyperplane and to 0 with the others."""
    from .exterior import merge_wedge

    idx6 = monomial_index(6, 3)
    m = monomials(5, 3)[i]
    comp = tuple(sorted(set(range(5)) - set(m))) + (5,)
    sign, _ = merge_wedge(m, comp)
    row = [Fraction(0)] * 20
    row[idx6[comp]] = Fraction(sign)
    return row


def graph_row(i: int, coeffs) -> list[Fraction]:
    """Row of the graph Lagrangian of a symmetric matrix over the splitting
    (3-forms on the hyperplane) + (e6 wedge 2-forms)."""
    idx6 = monomial_index(6, 3)
    row = [Fraction(0)] * 20
    row[idx6[monomials(5, 3)[i]]] = Fraction(1)
    for j, c in enumerate(coeffs):
        if c != 0:
            dual = _dual_basis_row(j)
            row = [a + c * b for a, b in zip(row, dual)]
    return row


@lru_cache(maxsize=None)
def sigma_fixture_lagrangian() -> LagrangianData:
    """A Lagrangian containing the rank-4 form, as a graph over the 3-forms
    of the hyperplane that kills it.

    The graph of a symmetric matrix s over the decomposition (3-forms on the
    hyperplane) + (e6 wedge 2-forms) is Lagrangian; choosing s with the form
    in its kernel puts the form inside the Lagrangian, which makes the point
    e1 land in the first exceptional locus and suitable 3-spaces in the
    second.
    """
    omega = sigma_form()
    # a fixed symmetric integer seed matrix
    s0 = Matrix(
        [
            [2, 1, 0, 0, 1, 0, 0, 0, 0, 1],
            [1, 3, 1, 0, 0, 0, 1, 0, 0, 0],
            [0, 1, 1, 1, 0, 0, 0, 0, 1, 0],
            [0, 0, 1, 4, 0, 1, 0, 0, 0, 0],
            [1, 0, 0, 0, 2, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0, 1, 1, 0, 0, 1],
            [0, 1, 0, 0, 0, 1, 3, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 2, 1, 0],
            [0, 0, 1, 0, 0, 0, 0, 1, 1, 0],
            [1, 0, 0, 0, 0, 1, 0, 0, 0, 5],
        ]
    )
    # project so the distinguished form spans the kernel direction
    w = [omega.coords[monomial_index(6, 3)[m]] for m in monomials(5, 3)]
    s0w = s0.apply(w)
    scale = sum((a * b for a, b in zip(s0w, w)), Fraction(0))
    corr = Matrix(
        [[s0w[i] * s0w[j] / scale for j in range(10)] for i in range(10)]
    )
    s = s0 - corr
    rows = [graph_row(i, s.row(i)) for i in range(10)]
    return LagrangianData(a=Subspace.from_rows(20, rows), a1=A1_ZERO)


@lru_cache(maxsize=None)
def sigma_fixture() -> GMData:
    return lagrangian_to_gm(sigma_fixture_lagrangian())


def all_gm_fixtures() -> dict[str, GMData]:
    return {
        "fivefold": fivefold(),
        "sixfold_special": sixfold_special(),
        "threefold": threefold(),
        "sigma_fourfold": sigma_fixture(),
    }


def all_lagrangian_fixtures() -> dict[str, LagrangianData]:
    return {
        "fivefold": fivefold_lagrangian(),
        "sixfold_special": LagrangianData(a=fivefold_lagrangian().a, a1=A1_ONE),
        "threefold": threefold_lagrangian(),
        "sigma_fourfold": sigma_fixture_lagrangian(),
    }
