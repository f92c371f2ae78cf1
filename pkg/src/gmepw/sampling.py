"""Seeded random generators for matrices, subspaces, and Lagrangians.

Randomness always flows through an explicit ``random.Random`` instance so
that every test and CLI run is reproducible from its seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exterior import SymplecticSpace
from .linalg import Matrix, Subspace
from .quadrics import LagrangianDecomposition, is_lagrangian, omega_orthogonal


def rng_from_seed(seed) -> random.Random:
    return random.Random(seed)


def random_int_fraction(rng: random.Random, height: int = 5) -> Fraction:
    return Fraction(rng.randint(-height, height))


def random_vector(rng: random.Random, n: int, height: int = 5) -> list[Fraction]:
    return [random_int_fraction(rng, height) for _ in range(n)]


def random_nonzero_vector(rng: random.Random, n: int, height: int = 5) -> list[Fraction]:
    while True:
        v = random_vector(rng, n, height)
        if any(x != 0 for x in v):
            return v


def random_matrix(rng: random.Random, rows: int, cols: int, height: int = 5) -> Matrix:
    return Matrix([[random_int_fraction(rng, height) for _ in range(cols)] for _ in range(rows)])


def random_invertible(rng: random.Random, n: int, height: int = 5) -> Matrix:
    while True:
        m = random_matrix(rng, n, n, height)
        if m.det() != 0:
            return m


def random_symmetric(rng: random.Random, n: int, height: int = 5, rank: int | None = None) -> Matrix:
    """Random symmetric matrix, optionally of prescribed (generic) rank."""
    if rank is None:
        m = random_matrix(rng, n, n, height)
        return Matrix(
            [[m.data[i][j] + m.data[j][i] for j in range(n)] for i in range(n)]
        )
    d = Matrix.zero(n, n)
    for i in range(rank):
        d.data[i][i] = Fraction(rng.choice([1, 2, -1, 3]))
    t = random_invertible(rng, n, 2)
    return t.transpose() * d * t


def symplectic_basis(space: SymplecticSpace) -> tuple[list, list]:
    """A symplectic frame (p_i, q_i): omega(p_i, q_j) = delta_ij, blocks isotropic.

    Deterministic greedy construction from the standard coordinates.
    """
    n = space.total_dim
    remaining = Subspace.full(n)
    ps, qs = [], []
    while remaining.dim > 0:
        p = remaining.basis_rows()[0]
        # find a partner with omega(p, q) nonzero inside the remaining space
        q = None
        for cand in remaining.basis_rows()[1:]:
            val = space.omega(p, cand)
            if val != 0:
                q = [x / val for x in cand]
                break
        if q is None:
            raise ValueError("form degenerate on the remaining space")
        ps.append(p)
        qs.append(q)
        # orthogonalize the rest against the hyperbolic pair
        new_rows = []
        for r in remaining.basis_rows():
            a = space.omega(p, r)
            b = space.omega(q, r)
            corrected = [x - a * y + b * z for x, y, z in zip(r, q, p)]
            new_rows.append(corrected)
        candidate = Subspace.from_rows(n, new_rows)
        pq = Subspace.from_rows(n, [p, q])
        remaining = candidate.intersect(omega_orthogonal(space, pq))
    return ps, qs


def standard_lagrangian_pair(space: SymplecticSpace) -> LagrangianDecomposition:
    ps, qs = symplectic_basis(space)
    n = space.total_dim
    return LagrangianDecomposition(
        space, Subspace.from_rows(n, ps), Subspace.from_rows(n, qs)
    )


def random_lagrangian(
    space: SymplecticSpace, rng: random.Random, height: int = 4
) -> Subspace:
    """Random Lagrangian as the graph of a random symmetric matrix.

    The graph is taken over one of the two halves of a symplectic frame
    (chosen at random) and the symmetric matrix may be rank-deficient, so
    all corank strata of the induced quadrics are reachable.
    """
    m = space.total_dim // 2
    ps, qs = symplectic_basis(space)
    if rng.random() < 0.5:
        # swap the roles; negate to keep omega(frame_i, partner_j) = delta
        ps, qs = qs, [[-x for x in p] for p in ps]
    s = random_symmetric(rng, m, height, rank=rng.choice([m, m, m, rng.randint(0, m)]))
    rows = []
    for i in range(m):
        v = list(ps[i])
        for j in range(m):
            if s.data[i][j] != 0:
                v = [x + s.data[i][j] * y for x, y in zip(v, qs[j])]
        rows.append(v)
    lag = Subspace.from_rows(space.total_dim, rows)
    assert is_lagrangian(space, lag)
    return lag


def random_lagrangian_in_wedge_space(rng: random.Random, height: int = 3) -> Subspace:
    from .exterior import wedge_symplectic_space

    return random_lagrangian(wedge_symplectic_space(), rng, height)
