"""The two quadric fibrations: exceptional-locus levels, and per-fiber
ambient/corank reports computed twice (by isotropic reduction of the big
graded space and by closed-form stratum arithmetic) and asserted equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .correspondence import (
    LagrangianData,
    A1_INF,
    dim_report,
    extended_decomposition,
    extended_lagrangian,
)
from .epw import y_stratum, z_stratum
from .exterior import wedge_space
from .gm import GmError
from .linalg import Fraction, Subspace, vec
from .quadrics import _induced_quadric, isotropic_reduce


def _check_in_v5(v) -> list:
    v = vec(v)
    if len(v) != 6 or v[5] != 0:
        raise GmError("the point must lie in the hyperplane")
    if all(x == 0 for x in v):
        raise GmError("zero vector")
    return v


def _check_v3_in_v5(v3: Subspace) -> Subspace:
    if v3.ambient_dim != 6 or v3.dim != 3:
        raise GmError("expected a 3-space of the 6-space")
    if any(row[5] != 0 for row in v3.basis_rows()):
        raise GmError("the 3-space must lie in the hyperplane")
    return v3


def sigma1_level(ld: LagrangianData, v) -> int:
    """dim of the meet of the Lagrangian with v ^ (2-forms on the hyperplane),
    for v in the hyperplane; positive iff v lies in the first exceptional locus."""
    v = _check_in_v5(v)
    v5 = Subspace.from_rows(6, [[Fraction(i == j) for i in range(6)] for j in range(5)])
    line = Subspace.from_rows(6, [v])
    return ld.a.intersect(wedge_space(line, v5)).dim


def sigma2_level(ld: LagrangianData, v3: Subspace) -> int:
    """dim of the meet with (hyperplane) ^ (2-forms of the 3-space); positive
    iff the 3-space lies in the second exceptional locus."""
    v3 = _check_v3_in_v5(v3)
    v5 = Subspace.from_rows(6, [[Fraction(i == j) for i in range(6)] for j in range(5)])
    return ld.a.intersect(wedge_space(v5, v3)).dim


@dataclass(frozen=True)
class FiberReport:
    ambient_proj_dim: int
    corank: int
    stratum_prediction: int
    sigma_level: int
    expected_dim: int
    agreement: bool


def _embed20(s: Subspace) -> Subspace:
    """A subspace of the 20 three-form coordinates inside the 22 coordinates."""
    return Subspace.from_rows(
        22, [list(r) + [Fraction(0), Fraction(0)] for r in s.basis_rows()]
    )


def _fiber_via_reduction(ld: LagrangianData, iso20: Subspace) -> tuple[int, int]:
    """(projective span dim, corank) of the reduced second quadric."""
    dec = extended_decomposition()
    a_hat = extended_lagrangian(ld)
    red = isotropic_reduce(dec, a_hat, _embed20(iso20))
    q2 = _induced_quadric(red.reduced, red.reduced_a, 2)
    return q2.span_dim - 1, q2.corank


def fibration1_fiber(ld: LagrangianData, v) -> FiberReport:
    """Fiber data of the first quadric fibration at a hyperplane point.

    The reduction is taken along v ^ (2-forms on the hyperplane); the closed
    form says the span has projective dimension n - 2 + sigma and the corank
    is the point stratum minus sigma.
    """
    if ld.a1 == A1_INF:
        raise GmError("fibrations need lci data")
    v = _check_in_v5(v)
    v5 = Subspace.from_rows(6, [[Fraction(i == j) for i in range(6)] for j in range(5)])
    line = Subspace.from_rows(6, [v])
    iso = wedge_space(line, v5)
    ambient, corank = _fiber_via_reduction(ld, iso)
    sigma = sigma1_level(ld, v)
    stratum = y_stratum(ld.a, v)
    n = dim_report(ld).predicted_dim_x
    expected_ambient = n - 2 + sigma
    expected_corank = stratum - sigma
    agreement = (ambient == expected_ambient) and (corank == expected_corank)
    if not agreement:
        raise GmError(
            f"fiber disagreement: reduction gives (P^{ambient}, corank {corank}), "
            f"closed form gives (P^{expected_ambient}, corank {expected_corank})"
        )
    return FiberReport(ambient, corank, stratum, sigma, n, agreement)


def fibration2_fiber(ld: LagrangianData, v3: Subspace) -> FiberReport:
    """Fiber data of the second quadric fibration at a 3-space of the hyperplane.

    The reduction is taken along (hyperplane) ^ (2-forms of the 3-space); the
    closed form says the span has projective dimension n + level - 3 and the
    corank is the quartic stratum minus the level.
    """
    if ld.a1 == A1_INF:
        raise GmError("fibrations need lci data")
    v3 = _check_v3_in_v5(v3)
    v5 = Subspace.from_rows(6, [[Fraction(i == j) for i in range(6)] for j in range(5)])
    iso = wedge_space(v5, v3)
    ambient, corank = _fiber_via_reduction(ld, iso)
    level = sigma2_level(ld, v3)
    stratum = z_stratum(ld.a, v3)
    n = dim_report(ld).predicted_dim_x
    expected_ambient = n + level - 3
    expected_corank = stratum - level
    agreement = (ambient == expected_ambient) and (corank == expected_corank)
    if not agreement:
        raise GmError(
            f"fiber disagreement: reduction gives (P^{ambient}, corank {corank}), "
            f"closed form gives (P^{expected_ambient}, corank {expected_corank})"
        )
    return FiberReport(ambient, corank, stratum, level, n, agreement)
