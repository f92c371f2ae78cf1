"""Exterior powers of the fixed 6-space and 5-space, wedge products,
the contraction maps along the last coordinate, the wedge symplectic form
on degree-3 forms, and decomposability tests.

Conventions, fixed once for the whole artifact:

* Monomials of degree p in ambient dimension n are the strictly increasing
  index tuples (1-based in documentation, 0-based internally) in
  lexicographic order.  For (n, p) = (6, 3): 123, 124, 125, 126, 134, ...,
  456 (20 entries).
* The distinguished hyperplane is the span of the first five basis vectors;
  "lambda" is the coordinate functional of e6.
* lambda_p is first-slot interior contraction:
  lambda_p(v1 ^ ... ^ vp) = sum_j (-1)^(j-1) lambda(v_j) v1 ^ ... v_j-hat ... ^ vp.
  On monomials: lambda_p(e_I) = 0 when 6 is not in I, and
  (-1)^(p-1) e_(I minus 6) when it is.
* The symplectic form on degree-3 forms in ambient 6 is the coefficient of
  e123456 in xi ^ eta; the determinant line is trivialized by e123456 -> 1
  and the 5-space determinant line by e12345 -> 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linalg import Matrix, Subspace, kernel, rat


@lru_cache(maxsize=None)
def monomials(ambient_dim: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Lexicographically ordered strictly increasing index tuples (0-based)."""
    return tuple(combinations(range(ambient_dim), degree))


@lru_cache(maxsize=None)
def monomial_index(ambient_dim: int, degree: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomials(ambient_dim, degree))}


def merge_wedge(i: tuple[int, ...], j: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Sign and sorted tuple of the concatenation, or None if indices repeat."""
    if set(i) & set(j):
        return None
    merged = list(i) + list(j)
    # count inversions of the concatenation (both halves are sorted)
    inv = 0
    for a in i:
        for b in j:
            if a > b:
                inv += 1
    return (-1) ** inv, tuple(sorted(merged))


@dataclass(frozen=True)
class ExteriorBasis:
    """Monomial basis of a fixed exterior power."""

    ambient_dim: int
    degree: int

    @property
    def size(self) -> int:
        return len(monomials(self.ambient_dim, self.degree))

    @property
    def monomial_list(self) -> tuple[tuple[int, ...], ...]:
        return monomials(self.ambient_dim, self.degree)


class MultiVector:
    """An element of a fixed exterior power in the monomial basis."""

    __slots__ = ("basis", "coords")

    def __init__(self, basis: ExteriorBasis, coords):
        coords = [rat(c) for c in coords]
        if len(coords) != basis.size:
            raise ValueError("coordinate length differs from the monomial count")
        self.basis = basis
        self.coords = coords

    @classmethod
    def zero(cls, ambient_dim: int, degree: int) -> "MultiVector":
        b = ExteriorBasis(ambient_dim, degree)
        return cls(b, [0] * b.size)

    @classmethod
    def from_monomial(cls, ambient_dim: int, indices, coeff=1) -> "MultiVector":
        """Monomial e_I from 0-based indices, sorted with sign."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            return cls.zero(ambient_dim, len(idx))
        sign = 1
        # insertion-sort sign count
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    sign = -sign
        b = ExteriorBasis(ambient_dim, len(idx))
        coords = [Fraction(0)] * b.size
        coords[monomial_index(ambient_dim, len(idx))[tuple(sorted(idx))]] = rat(coeff) * sign
        return cls(b, coords)

    @classmethod
    def from_coords(cls, ambient_dim: int, degree: int, coords) -> "MultiVector":
        return cls(ExteriorBasis(ambient_dim, degree), coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiVector)
            and self.basis == other.basis
            and self.coords == other.coords
        )

    def __add__(self, other: "MultiVector") -> "MultiVector":
        if self.basis != other.basis:
            raise ValueError("basis mismatch")
        return MultiVector(self.basis, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        if self.basis != other.basis:
            raise ValueError("basis mismatch")
        return MultiVector(self.basis, [a - b for a, b in zip(self.coords, other.coords)])

    def scale(self, c) -> "MultiVector":
        c = rat(c)
        return MultiVector(self.basis, [c * a for a in self.coords])

    def __repr__(self) -> str:
        terms = []
        for m, c in zip(self.basis.monomial_list, self.coords):
            if c != 0:
                label = "e" + "".join(str(i + 1) for i in m)
                terms.append(f"{c}*{label}")
        return "MultiVector(" + (" + ".join(terms) if terms else "0") + ")"


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    """Graded-antisymmetric bilinear wedge product in the fixed basis."""
    if a.basis.ambient_dim != b.basis.ambient_dim:
        raise ValueError("ambient mismatch")
    n = a.basis.ambient_dim
    p, q = a.basis.degree, b.basis.degree
    if p + q > n:
        raise ValueError(f"degree overflow: {p} + {q} > {n}")
    out = MultiVector.zero(n, p + q)
    target = monomial_index(n, p + q)
    amons = a.basis.monomial_list
    bmons = b.basis.monomial_list
    for i, ca in enumerate(a.coords):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coords):
            if cb == 0:
                continue
            sw = merge_wedge(amons[i], bmons[j])
            if sw is None:
                continue
            sign, mono = sw
            out.coords[target[mono]] += sign * ca * cb
    return out


def vector_to_multivector(v, ambient_dim: int = 6) -> MultiVector:
    return MultiVector.from_coords(ambient_dim, 1, v)


def symplectic_form_l3v6(xi: MultiVector, eta: MultiVector) -> Fraction:
    """Coefficient of e123456 in xi ^ eta; skew-symmetric and non-degenerate."""
    for m in (xi, eta):
        if m.basis != ExteriorBasis(6, 3):
            raise ValueError("arguments must be degree-3 forms in ambient 6")
    total = Fraction(0)
    mons = monomials(6, 3)
    idx = monomial_index(6, 3)
    for i, c in enumerate(xi.coords):
        if c == 0:
            continue
        comp = tuple(sorted(set(range(6)) - set(mons[i])))
        d = eta.coords[idx[comp]]
        if d == 0:
            continue
        sign = merge_wedge(mons[i], comp)[0]
        total += sign * c * d
    return total


@lru_cache(maxsize=None)
def l3v6_gram() -> Matrix:
    """Gram matrix of the wedge form on the 20 degree-3 monomials."""
    mons = monomials(6, 3)
    idx = monomial_index(6, 3)
    n = len(mons)
    g = Matrix.zero(n, n)
    for i, m in enumerate(mons):
        comp = tuple(sorted(set(range(6)) - set(m)))
        g.data[i][idx[comp]] = Fraction(merge_wedge(m, comp)[0])
    return g


@dataclass(frozen=True)
class SymplecticSpace:
    """An even-dimensional space with a fixed non-degenerate skew form."""

    total_dim: int
    form: Matrix

    def __post_init__(self):
        if self.form.rows != self.total_dim or self.form.cols != self.total_dim:
            raise ValueError("form size differs from total dimension")
        if not self.form.is_skew():
            raise ValueError("form is not skew-symmetric")
        if self.form.det() == 0:
            raise ValueError("form is degenerate")

    def omega(self, u, v) -> Fraction:
        lhs = self.form.left_apply(u)
        return sum((a * b for a, b in zip(lhs, v)), Fraction(0))


@lru_cache(maxsize=None)
def wedge_symplectic_space() -> SymplecticSpace:
    """Degree-3 forms in ambient 6 with the wedge symplectic form."""
    return SymplecticSpace(20, l3v6_gram())


def lambda_p(xi: MultiVector) -> MultiVector:
    """Interior contraction along the e6 coordinate functional.

    Kills exactly the forms supported on the first five coordinates and maps
    e_I with 6 in I to (-1)^(degree-1) e_(I minus 6), an element of the
    degree-(p-1) power of the 5-space.
    """
    if xi.basis.ambient_dim != 6:
        raise ValueError("contraction is defined on ambient dimension 6")
    p = xi.basis.degree
    if not 1 <= p <= 6:
        raise ValueError("degree out of range")
    sign = (-1) ** (p - 1)
    out = MultiVector.zero(5, p - 1)
    tgt = monomial_index(5, p - 1)
    for m, c in zip(xi.basis.monomial_list, xi.coords):
        if c == 0 or m[-1] != 5:
            continue
        out.coords[tgt[m[:-1]]] += sign * c
    return out


def inject(mv: MultiVector, ambient_dim: int = 6) -> MultiVector:
    """Inclusion of a power of the 5-space into the same power of the 6-space."""
    if mv.basis.ambient_dim > ambient_dim:
        raise ValueError("cannot inject into a smaller space")
    out = MultiVector.zero(ambient_dim, mv.basis.degree)
    tgt = monomial_index(ambient_dim, mv.basis.degree)
    for m, c in zip(mv.basis.monomial_list, mv.coords):
        if c != 0:
            out.coords[tgt[m]] += c
    return out


def is_decomposable(a: MultiVector) -> Subspace | None:
    """Decide whether a degree-3 form in ambient 6 is a triple wedge.

    Computes D(a) = kernel of v -> v ^ a (a map from the 6-space to the
    degree-4 power) and returns the 3-space of divisors when dim D(a) = 3,
    or None otherwise.
    """
    if a.basis != ExteriorBasis(6, 3):
        raise ValueError("decomposability test expects degree 3 in ambient 6")
    if a.is_zero():
        raise ValueError("zero vector")
    d = divisor_space(a)
    return d if d.dim == 3 else None


def divisor_space(a: MultiVector) -> Subspace:
    """Kernel of v -> v ^ a as a subspace of the 6-space."""
    cols = []
    for i in range(6):
        ei = MultiVector.from_monomial(6, (i,))
        cols.append(wedge(ei, a).coords)
    return kernel(Matrix.from_cols(cols))


def subspace_to_multivectors(s: Subspace, ambient_dim: int, degree: int) -> list[MultiVector]:
    """Rows of a coordinate subspace reinterpreted as exterior-power elements."""
    return [MultiVector.from_coords(ambient_dim, degree, row) for row in s.basis.data]


def multivector_subspace(vectors, ambient_dim: int, degree: int) -> Subspace:
    """Span of multivectors as a subspace of the coordinate space."""
    size = ExteriorBasis(ambient_dim, degree).size
    rows = []
    for v in vectors:
        if v.basis != ExteriorBasis(ambient_dim, degree):
            raise ValueError("mixed bases in span")
        rows.append(v.coords)
    return Subspace.from_rows(size, rows)


def wedge_space(u: Subspace, w: Subspace) -> Subspace:
    """Span of x ^ y1 ^ y2 over x in u and y1, y2 in w, inside degree 3.

    Realizes the subspaces v ^ (degree-2 power of the 6-space or 5-space) and
    the 10-dimensional spaces spanned by a 3-space, used by the stratum and
    fibration computations.
    """
    if u.ambient_dim != 6 or w.ambient_dim != 6:
        raise ValueError("ambient mismatch: both factors must live in the 6-space")
    if u.dim == 0:
        raise ValueError("wedge_space needs a non-trivial first factor")
    gens = []
    wrows = w.basis_rows()
    for x in u.basis_rows():
        xv = vector_to_multivector(x)
        for i in range(len(wrows)):
            for j in range(i + 1, len(wrows)):
                gens.append(
                    wedge(xv, wedge(vector_to_multivector(wrows[i]), vector_to_multivector(wrows[j])))
                )
    return multivector_subspace(gens, 6, 3)


def wedge_cube(u: Subspace) -> Subspace:
    """Degree-3 power of a subspace of the 6-space, e.g. a hyperplane cube."""
    rows = u.basis_rows()
    gens = []
    for c in combinations(range(len(rows)), 3):
        gens.append(
            wedge(
                vector_to_multivector(rows[c[0]]),
                wedge(vector_to_multivector(rows[c[1]]), vector_to_multivector(rows[c[2]])),
            )
        )
    return multivector_subspace(gens, 6, 3) if gens else Subspace.zero(20)


@lru_cache(maxsize=None)
def l3v5_subspace() -> Subspace:
    """The degree-3 power of the standard 5-space inside the 20 coordinates."""
    rows = []
    idx = monomial_index(6, 3)
    for m in monomials(5, 3):
        row = [Fraction(0)] * 20
        row[idx[m]] = Fraction(1)
        rows.append(row)
    return Subspace.from_rows(20, rows)


def exterior_power_matrix(f: Matrix, degree: int) -> Matrix:
    """Induced matrix on the exterior power; columns follow monomial order."""
    if f.rows != f.cols:
        raise ValueError("change of basis must be square")
    n = f.rows
    cols = []
    for m in monomials(n, degree):
        imgs = [vector_to_multivector(f.col(i), n) for i in m]
        acc = imgs[0]
        for nxt in imgs[1:]:
            acc = wedge(acc, nxt)
        cols.append(acc.coords)
    return Matrix.from_cols(cols)


def lambda3_matrix() -> Matrix:
    """Matrix of the degree-3 contraction, rows over degree-2 monomials of the 5-space."""
    cols = []
    for m in monomials(6, 3):
        mv = MultiVector.from_monomial(6, m)
        cols.append(lambda_p(mv).coords)
    return Matrix.from_cols(cols)
