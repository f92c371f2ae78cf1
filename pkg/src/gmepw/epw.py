"""EPW stratifications: point and hyperplane strata, the incidence condition,
the quartic strata on 3-spaces, degree certificates along lines and pencils,
and per-vector decomposable scans.

Membership in a stratum is a rank statement about the meet of the Lagrangian
with a moving Lagrangian family.  Along a line the membership locus is cut
out by one determinant; the determinant of a compressed pairing matrix picks
up chart factors, which are removed exactly by taking the gcd over several
independent compressions and certified against pointwise membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import (
    MultiVector,
    is_decomposable,
    l3v6_gram,
    monomials,
    vector_to_multivector,
    wedge,
    wedge_space,
)
from .gm import GmError
from .linalg import Matrix, Subspace, vec
from .polynomials import Poly, interpolate, poly_gcd
from .sampling import random_matrix, rng_from_seed


def y_stratum(a: Subspace, v) -> int:
    """dim of the meet with v ^ (2-forms of the 6-space)."""
    v = vec(v)
    if all(x == 0 for x in v):
        raise GmError("zero vector")
    line = Subspace.from_rows(6, [v])
    return a.intersect(wedge_space(line, Subspace.full(6))).dim


def y_dual_stratum(a: Subspace, v5: Subspace) -> int:
    """dim of the meet with the 3-forms on a hyperplane."""
    from .exterior import wedge_cube

    if v5.ambient_dim != 6 or v5.dim != 5:
        raise GmError("expected a hyperplane of the 6-space")
    return a.intersect(wedge_cube(v5)).dim


def y_hat_member(a: Subspace, v, v5: Subspace) -> int:
    """dim of the meet with v ^ (2-forms on the hyperplane); v must lie in it."""
    v = vec(v)
    if v5.ambient_dim != 6 or v5.dim != 5:
        raise GmError("expected a hyperplane of the 6-space")
    if not v5.contains(v):
        raise GmError("the point must lie on the hyperplane")
    line = Subspace.from_rows(6, [v])
    return a.intersect(wedge_space(line, v5)).dim


def z_stratum(a: Subspace, v3: Subspace) -> int:
    """dim of the meet with (6-space) ^ (2-forms of a 3-space)."""
    if v3.ambient_dim != 6 or v3.dim != 3:
        raise GmError("expected a 3-dimensional subspace of the 6-space")
    return a.intersect(wedge_space(Subspace.full(6), v3)).dim


@dataclass(frozen=True)
class LineDegreeCertificate:
    """Membership polynomial of a stratum along a line or pencil."""

    kind: str  # "y" or "z"
    base: tuple
    direction: tuple
    poly: Poly
    degree: int
    sample_consistency: int
    stripped: tuple[Poly, ...]
    contains_line: bool = False


def _lagrangian_family_gens_y(base, direction):
    """Generators of v(t) ^ (2-forms), one list of interpolating closures."""
    base_mv = vector_to_multivector(vec(base))
    dir_mv = vector_to_multivector(vec(direction))
    two_forms = [MultiVector.from_monomial(6, m) for m in monomials(6, 2)]

    def gens_at(t: Fraction) -> list[list[Fraction]]:
        vt = base_mv + dir_mv.scale(t)
        return [wedge(vt, f).coords for f in two_forms]

    return gens_at, 1  # each generator is affine in t


def _lagrangian_family_gens_z(u1, u2, u3, u4):
    """Generators of (6-space) ^ (2-forms of span(u1, u2, u3 + t u4))."""
    u1, u2, u3, u4 = (vec(u) for u in (u1, u2, u3, u4))
    basis_units = [vector_to_multivector([Fraction(i == j) for i in range(6)]) for j in range(6)]

    def gens_at(t: Fraction) -> list[list[Fraction]]:
        w3 = [Fraction(a) + t * Fraction(b) for a, b in zip(u3, u4)]
        vs = [vector_to_multivector(u1), vector_to_multivector(u2), vector_to_multivector(w3)]
        pairs = [wedge(vs[0], vs[1]), wedge(vs[0], vs[2]), wedge(vs[1], vs[2])]
        out = []
        for e in basis_units:
            for p in pairs:
                out.append(wedge(e, p).coords)
        return out

    return gens_at, 2  # the moving pair contributes degree up to 2


def _membership_poly(a: Subspace, gens_at, gen_degree: int, seed, tries: int = 6) -> Poly | None:
    """gcd of compressed pairing determinants along the family.

    The pairing of the Lagrangian basis against generators of the moving
    Lagrangian vanishes exactly on the membership locus; a random compression
    to a square matrix multiplies the locus polynomial by a chart factor that
    a second independent compression almost surely avoids.  Returns None when
    the determinant vanishes identically for every compression (the family
    stays inside the stratum).
    """
    rng = rng_from_seed(seed)
    gram = l3v6_gram()
    pair_rows = [gram.left_apply(r) for r in a.basis_rows()]  # functionals on 3-forms
    n_gens = len(gens_at(Fraction(0)))
    bound = 10 * gen_degree + 1

    def det_poly_for(compression: Matrix) -> Poly:
        pts = []
        for t in range(bound + 1):
            gens = gens_at(Fraction(t))
            compressed = [
                [sum((compression.data[c][g] * gens[g][k] for g in range(n_gens)), Fraction(0))
                 for k in range(20)]
                for c in range(10)
            ]
            m = Matrix([[sum((pr[k] * col[k] for k in range(20)), Fraction(0)) for col in compressed]
                        for pr in pair_rows])
            pts.append((Fraction(t), m.det()))
        return interpolate(pts)

    g: Poly | None = None
    for _ in range(tries):
        comp = random_matrix(rng, 10, n_gens, 3)
        p = det_poly_for(comp)
        if p.is_zero():
            continue
        g = p if g is None else poly_gcd(g, p)
        if g.degree == 0:
            break
    return g


def stratum_poly_on_line(
    a: Subspace,
    base,
    direction,
    kind: str = "y",
    seed=0,
    samples: int = 20,
) -> LineDegreeCertificate:
    """Degree certificate for the stratum along a line (kind y) or pencil (kind z).

    For kind z the pencil is span(base[0], base[1], base[2] + t * direction).
    The certificate polynomial is normalized to primitive integer
    coefficients; its roots are checked against direct membership at fresh
    parameters, and the stripped chart factors are reported.
    """
    if kind == "y":
        gens_at, gdeg = _lagrangian_family_gens_y(base, direction)
        base_t = tuple(vec(base))
        dir_t = tuple(vec(direction))

        def member(t: Fraction) -> bool:
            v = [b + t * d for b, d in zip(vec(base), vec(direction))]
            return y_stratum(a, v) >= 1

    elif kind == "z":
        u1, u2, u3 = base
        gens_at, gdeg = _lagrangian_family_gens_z(u1, u2, u3, direction)
        base_t = tuple(tuple(vec(u)) for u in base)
        dir_t = tuple(vec(direction))

        def member(t: Fraction) -> bool:
            w3 = [Fraction(x) + t * Fraction(y) for x, y in zip(vec(u3), vec(direction))]
            v3 = Subspace.from_rows(6, [vec(u1), vec(u2), w3])
            if v3.dim != 3:
                raise GmError("pencil degenerates at a sample parameter")
            return z_stratum(a, v3) >= 1

    else:
        raise GmError("kind must be y or z")

    raw = _membership_poly(a, gens_at, gdeg, seed)
    stripped: tuple[Poly, ...] = ()
    if raw is None:
        return LineDegreeCertificate(
            kind, base_t, dir_t, Poly.zero(), -1, 0, stripped, contains_line=True
        )
    poly = raw.primitive()

    rng = rng_from_seed(f"{seed}-membership-check")
    checked = 0
    t_val = Fraction(0)
    used = set()
    while checked < samples:
        t_val = Fraction(rng.randint(-4 * samples, 4 * samples), rng.randint(1, 5))
        if t_val in used:
            continue
        used.add(t_val)
        try:
            is_member = member(t_val)
        except GmError:
            continue
        if (poly(t_val) == 0) != is_member:
            raise GmError("certificate disagrees with pointwise membership")
        checked += 1
    return LineDegreeCertificate(kind, base_t, dir_t, poly, poly.degree, checked, stripped)


@dataclass(frozen=True)
class DecomposableReport:
    hits: tuple
    scanned: int
    note: str = "per-vector scan only; emptiness of the decomposable locus is not certified"


def scan_decomposables(a: Subspace, candidates=None, pencil=None, samples: int = 25) -> DecomposableReport:
    """Test listed candidates, or sampled members of a pencil inside the
    Lagrangian, for decomposability.  Candidates must lie in the subspace."""
    hits = []
    scanned = 0
    if candidates is not None:
        for mv in candidates:
            if not a.contains(mv.coords):
                raise GmError("candidate outside the subspace")
            if mv.is_zero():
                raise GmError("zero vector")
            d = is_decomposable(mv)
            scanned += 1
            if d is not None:
                hits.append((mv, d))
    if pencil is not None:
        a0, a1 = pencil
        for mv in (a0, a1):
            if not a.contains(mv.coords):
                raise GmError("pencil endpoint outside the subspace")
        for t in range(-samples // 2, samples - samples // 2):
            mv = a0 + a1.scale(t)
            if mv.is_zero():
                continue
            d = is_decomposable(mv)
            scanned += 1
            if d is not None:
                hits.append((mv, d))
    return DecomposableReport(tuple(hits), scanned)
