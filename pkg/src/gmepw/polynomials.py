"""Dense univariate polynomials with exact rational coefficients.

Small and purpose-built: evaluation, exact division, gcd, square-free parts
and Lagrange interpolation are everything the determinant-on-a-line
computations need.  Coefficients are stored low degree first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

from .linalg import rat


class Poly:
    """Univariate polynomial over the rationals, coefficients c0 + c1 t + ..."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls([])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"

    def __call__(self, t) -> Fraction:
        t = rat(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = rat(c)
        return Poly([c * a for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        q = [Fraction(0)] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            q[i - d] = f
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] -= f * c
        return Poly(q), Poly(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def primitive(self) -> "Poly":
        """Integer-primitive normalization with positive leading coefficient."""
        if self.is_zero():
            return self
        den = int_lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        ints = [v // g for v in ints]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        return Poly(ints)

    def root_multiplicity(self, t0) -> int:
        """Multiplicity of the root t0 (0 if not a root)."""
        if self.is_zero():
            raise ValueError("every point is a root of the zero polynomial")
        t0 = rat(t0)
        mult = 0
        p = self
        lin = Poly([-t0, 1])
        while p(t0) == 0:
            p = p.exact_div(lin)
            mult += 1
        return mult


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), monic; carries each root exactly once."""
    if p.is_zero():
        return p
    g = poly_gcd(p, p.derivative())
    if g.is_zero() or g.degree == 0:
        return p.monic()
    return p.exact_div(g).monic()


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of p, via the integer root bound on the primitive form."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    prim = p.primitive()
    # strip t^k
    k = 0
    cs = list(prim.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    roots = [Fraction(0)] if k else []
    if not cs or len(cs) == 1:
        return roots
    a0, an = abs(int(cs[0])), abs(int(cs[-1]))
    p_divs = [d for d in range(1, a0 + 1) if a0 % d == 0]
    q_divs = [d for d in range(1, an + 1) if an % d == 0]
    cand = {Fraction(s * pd, qd) for pd in p_divs for qd in q_divs for s in (1, -1)}
    trimmed = Poly(cs)
    roots.extend(sorted(r for r in cand if trimmed(r) == 0))
    return roots


def interpolate(points) -> Poly:
    """Lagrange interpolation through exact (x, y) pairs with distinct x."""
    points = [(rat(x), rat(y)) for x, y in points]
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = Poly.zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Poly.constant(yi)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = num * Poly([-xj, 1]).scale(Fraction(1, 1) / (xi - xj))
        total = total + num
    return total
